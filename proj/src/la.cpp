#include "fpp/la.hpp"

#include <algorithm>

namespace fpp {

Int det_int(Mat<Int> m) {
    if (m.rows != m.cols) fail(errc::bad_config, "det of non-square matrix");
    size_t n = m.rows;
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t sel = n;
            for (size_t i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    sel = i;
                    break;
                }
            if (sel == n) return Int(0);
            for (size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(k, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    Int d = m.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

PadicElt det_padic(const Mat<PadicElt>& m) {
    if (m.rows != m.cols) fail(errc::bad_config, "det of non-square matrix");
    if (m.rows == 0) fail(errc::bad_config, "det of empty matrix");
    const PadicRing* R = m.a[0].ring;
    if (R->k != 1) fail(errc::bad_config, "det_padic expects k = 1");
    Mat<Int> mi(m.rows, m.cols, Int(0));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) mi.at(i, j) = m.at(i, j).c[0];
    Int d = det_int(std::move(mi));
    return PadicElt::from_int(R, d);
}

CertifiedNullspace padic_nullspace(const Mat<PadicElt>& m, uint32_t margin) {
    if (m.rows == 0 || m.cols == 0) fail(errc::bad_config, "empty matrix");
    const PadicRing* R = m.a[0].ring;
    if (R->k != 1) fail(errc::bad_config, "padic_nullspace expects k = 1 (expand first)");
    uint32_t e = R->e;
    if (!(e > margin && margin >= 1)) fail(errc::bad_config, "need e > margin >= 1");
    const uint32_t p = R->p;
    const Int& pe = R->pe;

    size_t rows = m.rows, cols = m.cols;
    std::vector<Int> w(rows * cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) w[i * cols + j] = m.at(i, j).c[0];
    // column transforms
    std::vector<Int> V(cols * cols, Int(0));
    for (size_t j = 0; j < cols; ++j) V[j * cols + j] = 1;

    std::vector<bool> row_used(rows, false), col_used(cols, false);
    std::vector<uint32_t> pivot_vals;

    auto modpe = [&](Int& x) {
        x %= pe;
        if (x < 0) x += pe;
    };

    while (true) {
        // find min-valuation entry among unused rows/cols
        uint32_t best_v = e;
        size_t bi = rows, bj = cols;
        for (size_t i = 0; i < rows && best_v > 0; ++i) {
            if (row_used[i]) continue;
            for (size_t j = 0; j < cols; ++j) {
                if (col_used[j]) continue;
                uint32_t v = int_valuation(w[i * cols + j], p, e);
                if (v < best_v) {
                    best_v = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        }
        if (bi == rows || best_v >= e) break;  // remaining block is 0 mod p^e
        if (best_v > margin)
            fail(errc::precision_exhausted,
                 "pivot of valuation " + std::to_string(best_v) + " with margin " +
                     std::to_string(margin));
        pivot_vals.push_back(best_v);

        Int pv;
        mpz_ui_pow_ui(pv.get_mpz_t(), p, best_v);
        Int unit = w[bi * cols + bj] / pv;
        Int unit_inv;
        if (mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), pe.get_mpz_t()) == 0)
            fail(errc::internal, "pivot unit not invertible");

        // clear the pivot column in other unused rows (row ops, V untouched)
        for (size_t i = 0; i < rows; ++i) {
            if (row_used[i] || i == bi) continue;
            Int& ent = w[i * cols + bj];
            if (ent == 0) continue;
            Int f = (ent / pv) * unit_inv;
            modpe(f);
            if (f == 0) continue;
            for (size_t j = 0; j < cols; ++j) {
                if (col_used[j]) continue;
                Int& t = w[i * cols + j];
                t -= f * w[bi * cols + j];
                modpe(t);
            }
        }
        // clear the pivot row in other unused columns (col ops, mirrored to V)
        for (size_t j = 0; j < cols; ++j) {
            if (col_used[j] || j == bj) continue;
            Int& ent = w[bi * cols + j];
            if (ent == 0) continue;
            Int f = (ent / pv) * unit_inv;
            modpe(f);
            if (f == 0) continue;
            for (size_t i = 0; i < rows; ++i) {
                if (row_used[i]) continue;
                Int& t = w[i * cols + j];
                t -= f * w[i * cols + bj];
                modpe(t);
            }
            for (size_t i = 0; i < cols; ++i) {
                Int& t = V[i * cols + j];
                t -= f * V[i * cols + bj];
                modpe(t);
            }
        }
        row_used[bi] = true;
        col_used[bj] = true;
    }

    CertifiedNullspace out;
    out.certified_precision = e - margin;
    out.pivot_valuations = std::move(pivot_vals);
    for (size_t j = 0; j < cols; ++j) {
        if (col_used[j]) continue;
        std::vector<PadicElt> v;
        v.reserve(cols);
        for (size_t i = 0; i < cols; ++i) v.push_back(PadicElt::from_int(R, V[i * cols + j]));
        out.basis.push_back(std::move(v));
    }
    out.dim = out.basis.size();
    return out;
}

Mat<PadicElt> expand_extension_rows(const Mat<PadicElt>& m) {
    if (m.rows == 0) fail(errc::bad_config, "empty matrix");
    const PadicRing* R = m.a[0].ring;
    uint32_t k = R->k;
    if (k == 1) return m;
    const PadicRing* R1 = padic_ring(R->p, R->e, 1);
    Mat<PadicElt> out(m.rows * k, m.cols, PadicElt(R1));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j)
            for (uint32_t t = 0; t < k; ++t)
                out.at(i * k + t, j) = PadicElt::from_int(R1, m.at(i, j).c[t]);
    out.provenance = m.provenance;
    return out;
}

}  // namespace fpp
