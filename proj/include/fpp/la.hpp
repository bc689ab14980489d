#ifndef FPP_LA_HPP
#define FPP_LA_HPP

#include <string>
#include <vector>

#include "fpp/poly.hpp"
#include "fpp/zpe.hpp"

namespace fpp {

template <class R>
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<R> a;
    std::string provenance;  // which points/monomials generated it

    Mat() = default;
    Mat(size_t r, size_t c, const R& fill) : rows(r), cols(c), a(r * c, fill) {}

    R& at(size_t i, size_t j) { return a[i * cols + j]; }
    const R& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static Mat identity(size_t n, const R& like) {
        Mat m(n, n, ring_from_int(like, 0));
        for (size_t i = 0; i < n; ++i) m.at(i, i) = ring_from_int(like, 1);
        return m;
    }
};

// ---------------------------------------------------------------------------
// Reduced row echelon form over an exact field.  Deterministic: pivots are
// the first rows with a nonzero entry in the leftmost unfinished column.
// ---------------------------------------------------------------------------

template <class F>
struct RrefResult {
    Mat<F> m;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

template <class F>
RrefResult<F> rref(Mat<F> m) {
    RrefResult<F> out;
    size_t r = 0;
    for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
        size_t sel = m.rows;
        for (size_t i = r; i < m.rows; ++i) {
            if (!ring_is_zero(m.at(i, col))) {
                sel = i;
                break;
            }
        }
        if (sel == m.rows) continue;
        if (sel != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        F piv_inv = ring_inv(m.at(r, col));
        for (size_t j = col; j < m.cols; ++j) m.at(r, j) *= piv_inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || ring_is_zero(m.at(i, col))) continue;
            F f = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.rank = r;
    out.m = std::move(m);
    return out;
}

template <class F>
size_t rank_of(const Mat<F>& m) {
    return rref(m).rank;
}

// basis of { v : M v = 0 } from the reduced form
template <class F>
std::vector<std::vector<F>> nullspace(const Mat<F>& m, const F& like) {
    RrefResult<F> r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    F zero = ring_from_int(like, 0), one = ring_from_int(like, 1);
    for (size_t fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> v(m.cols, zero);
        v[fc] = one;
        for (size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.m.at(i, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

// determinant over an exact field (Gaussian elimination with swap tracking)
template <class F>
F det_field(Mat<F> m, const F& like) {
    if (m.rows != m.cols) fail(errc::bad_config, "det of non-square matrix");
    F det = ring_from_int(like, 1);
    for (size_t col = 0; col < m.cols; ++col) {
        size_t sel = m.rows;
        for (size_t i = col; i < m.rows; ++i)
            if (!ring_is_zero(m.at(i, col))) {
                sel = i;
                break;
            }
        if (sel == m.rows) return ring_from_int(like, 0);
        if (sel != col) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        F piv_inv = ring_inv(m.at(col, col));
        for (size_t i = col + 1; i < m.rows; ++i) {
            if (ring_is_zero(m.at(i, col))) continue;
            F f = m.at(i, col) * piv_inv;
            for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

// fraction-free Bareiss elimination; exact over any integral domain in Z
Int det_int(Mat<Int> m);

// determinant over Z/p^e via integer lift + Bareiss (k = 1 rings)
PadicElt det_padic(const Mat<PadicElt>& m);

// ---------------------------------------------------------------------------
// Certified nullspace over Z/p^e (k = 1).
//
// Elimination is SNF-flavored with min-valuation pivoting and exact integer
// arithmetic mod p^e (a factor entry/pivot = (entry/p^v) * inv(unit part) is
// exact, so no precision is lost).  Column operations are mirrored into V,
// hence M . V_j == 0 (mod p^e) exactly for every non-pivot column j at
// termination.  Policy: a pivot of valuation v <= margin counts as rank; the
// run aborts with PrecisionExhausted if some pivot has valuation in
// (margin, e) — such an entry can be neither certified nonzero nor zero.
// ---------------------------------------------------------------------------

struct CertifiedNullspace {
    std::vector<std::vector<PadicElt>> basis;  // vectors of length cols
    size_t dim = 0;
    uint32_t certified_precision = 0;  // e - margin
    std::vector<uint32_t> pivot_valuations;
};

CertifiedNullspace padic_nullspace(const Mat<PadicElt>& m, uint32_t margin);

// Rows over (Z/p^e)[x]/(f) expand to k scalar rows (power-basis coefficients);
// scalar nullspaces correspond exactly.
Mat<PadicElt> expand_extension_rows(const Mat<PadicElt>& m);

}  // namespace fpp

#endif
