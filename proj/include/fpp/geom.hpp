#ifndef FPP_GEOM_HPP
#define FPP_GEOM_HPP

#include <span>
#include <vector>

#include "fpp/la.hpp"
#include "fpp/poly.hpp"

namespace fpp {

// rank of the Jacobian matrix of `eqs` at a point on the scheme (over the
// point's field); NotOnScheme if some equation does not vanish
template <class F>
size_t jacobian_rank(const std::vector<Poly<F>>& eqs, std::span<const F> x) {
    if (eqs.empty()) fail(errc::bad_config, "no equations");
    int n = eqs[0].nvars;
    Mat<F> J(eqs.size(), n, ring_from_int(x[0], 0));
    for (size_t i = 0; i < eqs.size(); ++i) {
        if (!ring_is_zero(eval_poly(eqs[i], x))) fail(errc::not_on_scheme, "point not on scheme");
        auto g = gradient(eqs[i], x);
        for (int j = 0; j < n; ++j) J.at(i, j) = g[j];
    }
    return rank_of(J);
}

// Operational nonreducedness criterion for a linear cut L of a scheme S in
// P^N: at every sampled point of V(S + L) the Jacobian of S + L has rank
// <= N - 2, i.e. the Zariski tangent space stays (at least) 2-dimensional
// along what would be a curve for a reduced cut.
template <class F>
bool is_nonreduced_cut(const std::vector<Poly<F>>& eqs, const Poly<F>& cut,
                       const std::vector<std::vector<F>>& sample, int nproj) {
    if (sample.empty()) fail(errc::empty_sample, "nonreducedness test with no sample points");
    std::vector<Poly<F>> all = eqs;
    all.push_back(cut);
    for (const auto& pt : sample) {
        size_t r = jacobian_rank(all, std::span<const F>(pt));
        if (r > static_cast<size_t>(nproj) - 2) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Formal neighborhood of a smooth surface point, as a graph parametrization:
// two coordinates move freely as parameters (t1, t2), the others are solved
// order by order so that every equation vanishes identically mod degree
// `order`+1.  Exact coefficient field.
// ---------------------------------------------------------------------------

template <class F>
struct FormalPatch {
    std::vector<F> center;            // normalized point, unit coordinate = 1
    int unit_coord = 0;               // pinned to the constant 1
    int param_coords[2] = {0, 0};     // coordinates equal to center + t1 / t2
    int order = 0;
    std::vector<Poly<F>> coords;      // length nvars, polynomials in (t1, t2)
};

template <class F>
FormalPatch<F> formal_neighborhood(const std::vector<Poly<F>>& eqs, std::vector<F> x, int order) {
    if (eqs.empty()) fail(errc::bad_config, "no equations");
    const int n = eqs[0].nvars;
    const int nproj = n - 1;
    F zero = ring_from_int(x[0], 0), one = ring_from_int(x[0], 1);

    normalize_point_field(x);
    int unit = -1;
    for (int i = 0; i < n; ++i)
        if (!ring_is_zero(x[i])) { unit = i; break; }

    // affine Jacobian (all coordinates except the pinned unit one)
    std::vector<int> aff;
    for (int i = 0; i < n; ++i)
        if (i != unit) aff.push_back(i);
    Mat<F> J(eqs.size(), aff.size(), zero);
    for (size_t i = 0; i < eqs.size(); ++i) {
        if (!ring_is_zero(eval_poly(eqs[i], std::span<const F>(x))))
            fail(errc::not_on_scheme, "formal neighborhood: point not on scheme");
        auto g = gradient(eqs[i], std::span<const F>(x));
        for (size_t j = 0; j < aff.size(); ++j) J.at(i, j) = g[aff[j]];
    }
    auto ker = nullspace(J, zero);
    if (ker.size() != 2 || rank_of(J) != static_cast<size_t>(nproj) - 2)
        fail(errc::singular_point, "formal neighborhood requires a smooth surface point");

    // pick parameter coordinates: first affine pair where the tangent
    // projection is invertible, then re-basis the kernel to the graph frame
    int i1 = -1, i2 = -1;
    std::vector<F> k1, k2;
    for (size_t aidx = 0; aidx < aff.size() && i1 < 0; ++aidx) {
        for (size_t bidx = aidx + 1; bidx < aff.size(); ++bidx) {
            F det = ker[0][aidx] * ker[1][bidx] - ker[0][bidx] * ker[1][aidx];
            if (!ring_is_zero(det)) {
                F dinv = ring_inv(det);
                k1.assign(aff.size(), zero);
                k2.assign(aff.size(), zero);
                for (size_t j = 0; j < aff.size(); ++j) {
                    // rows of inverse([k1 k2] restricted to (a,b)) applied to kernel
                    k1[j] = (ker[0][j] * ker[1][bidx] - ker[1][j] * ker[0][bidx]) * dinv;
                    k2[j] = (ker[1][j] * ker[0][aidx] - ker[0][j] * ker[1][aidx]) * dinv;
                }
                i1 = static_cast<int>(aidx);
                i2 = static_cast<int>(bidx);
                break;
            }
        }
    }
    if (i1 < 0) fail(errc::internal, "no invertible tangent projection");

    // solved coordinates = affine coords minus the two parameters
    std::vector<int> solved;
    for (size_t j = 0; j < aff.size(); ++j)
        if (static_cast<int>(j) != i1 && static_cast<int>(j) != i2)
            solved.push_back(static_cast<int>(j));
    Mat<F> Js(eqs.size(), solved.size(), zero);
    for (size_t i = 0; i < eqs.size(); ++i)
        for (size_t j = 0; j < solved.size(); ++j) Js.at(i, j) = J.at(i, solved[j]);
    if (rank_of(Js) != solved.size())
        fail(errc::inconsistent_lift, "solved block is singular at this point");

    FormalPatch<F> patch;
    patch.center = x;
    patch.unit_coord = unit;
    patch.param_coords[0] = aff[i1];
    patch.param_coords[1] = aff[i2];
    patch.order = order;

    // order-1 patch
    auto t_mono = [&](int e1, int e2) {
        Mono m(2);
        m.e[0] = static_cast<uint8_t>(e1);
        m.e[1] = static_cast<uint8_t>(e2);
        return m;
    };
    std::vector<Poly<F>> X(n, Poly<F>(2));
    for (int i = 0; i < n; ++i) X[i].add_term(t_mono(0, 0), x[i]);
    for (size_t j = 0; j < aff.size(); ++j) {
        if (!ring_is_zero(k1[j])) X[aff[j]].add_term(t_mono(1, 0), k1[j]);
        if (!ring_is_zero(k2[j])) X[aff[j]].add_term(t_mono(0, 1), k2[j]);
    }

    // order d >= 2: solve the linear system Js . c_alpha = -(residual coeff)
    for (int d = 2; d <= order; ++d) {
        std::vector<Mono> alphas;
        for (int e1 = d; e1 >= 0; --e1) alphas.push_back(t_mono(e1, d - e1));
        // residuals of all equations at the current truncation
        std::vector<Poly<F>> res;
        res.reserve(eqs.size());
        for (const auto& f : eqs)
            res.push_back(subst_trunc(f, std::span<const Poly<F>>(X), d, 2));
        for (const auto& alpha : alphas) {
            Mat<F> aug(eqs.size(), solved.size() + 1, zero);
            for (size_t i = 0; i < eqs.size(); ++i) {
                for (size_t j = 0; j < solved.size(); ++j) aug.at(i, j) = Js.at(i, j);
                auto it = res[i].terms.find(alpha);
                aug.at(i, solved.size()) = it == res[i].terms.end() ? zero : -it->second;
            }
            auto rr = rref(aug);
            // consistency: no pivot in the rhs column
            for (size_t c : rr.pivot_cols)
                if (c == solved.size())
                    fail(errc::inconsistent_lift, "formal neighborhood: inconsistent order step");
            std::vector<F> coeff(solved.size(), zero);
            for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
                coeff[rr.pivot_cols[i]] = rr.m.at(i, solved.size());
            for (size_t j = 0; j < solved.size(); ++j)
                if (!ring_is_zero(coeff[j])) X[aff[solved[j]]].add_term(alpha, coeff[j]);
        }
    }

    patch.coords = std::move(X);
    return patch;
}

// helper used above; kept separate from the p-adic variant in scheme.hpp
template <class F>
void normalize_point_field(std::vector<F>& x) {
    for (auto& c : x) {
        if (!ring_is_zero(c)) {
            F inv = ring_inv(c);
            for (auto& d : x) d *= inv;
            return;
        }
    }
    fail(errc::internal, "cannot normalize the zero vector");
}

}  // namespace fpp

#endif
