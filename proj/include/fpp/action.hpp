#ifndef FPP_ACTION_HPP
#define FPP_ACTION_HPP

#include <array>
#include <span>

#include "fpp/poly.hpp"

namespace fpp {

// ---------------------------------------------------------------------------
// The order-21 coordinate action on P^9: g3 permutes the coordinates in three
// 3-cycles fixing U0, g7 scales U_i by zeta^{w_i}.  Conventions:
//   (g3 . u)_i = u[kG3PointPerm[i]],   (g7 . u)_i = zeta^{kG7Weights[i]} u_i,
// and on polynomials (g . f)(u) = f(g^{-1} . u), so that
//   eval(g . f, x) = eval(f, g^{-1} . x).
// ---------------------------------------------------------------------------

inline constexpr std::array<int, 10> kG7Weights = {0, 6, 5, 3, 1, 2, 4, 1, 2, 4};
inline constexpr std::array<int, 10> kG3PointPerm = {0, 2, 3, 1, 5, 6, 4, 8, 9, 7};

inline constexpr std::array<int, 10> g3_point_perm_inv() {
    std::array<int, 10> inv{};
    for (int i = 0; i < 10; ++i) inv[kG3PointPerm[i]] = i;
    return inv;
}

// weight of a monomial under g7, in Z/7
inline int g7_weight(const Mono& m) {
    if (m.nvars() != 10) fail(errc::bad_config, "g7_weight needs 10 variables");
    int w = 0;
    for (int i = 0; i < 10; ++i) w += m.e[i] * kG7Weights[i];
    return w % 7;
}

template <class R>
std::vector<R> g3_act_point(std::span<const R> u) {
    std::vector<R> v;
    v.reserve(10);
    for (int i = 0; i < 10; ++i) v.push_back(u[kG3PointPerm[i]]);
    return v;
}

template <class R>
std::vector<R> g3_inv_act_point(std::span<const R> u) {
    constexpr auto inv = g3_point_perm_inv();
    std::vector<R> v;
    v.reserve(10);
    for (int i = 0; i < 10; ++i) v.push_back(u[inv[i]]);
    return v;
}

// (g7^j . u)_i = zeta^{j w_i} u_i
template <class R>
std::vector<R> g7_act_point(std::span<const R> u, const R& zeta, int j = 1) {
    std::vector<R> zp;
    zp.reserve(7);
    zp.push_back(ring_from_int(zeta, 1));
    for (int i = 1; i < 7; ++i) zp.push_back(zp.back() * zeta);
    std::vector<R> v;
    v.reserve(10);
    for (int i = 0; i < 10; ++i) v.push_back(zp[(kG7Weights[i] * j) % 7] * u[i]);
    return v;
}

// g3 on polynomials: substitute U_j <- (g3^{-1} u)_j = u[inv3[j]] applied twice
// (g3^{-1} = g3^2); exponent of output variable kG3PointPerm^{-2}... computed
// directly from the contract below.
template <class R>
Poly<R> g3_act(const Poly<R>& f) {
    if (f.nvars != 10) fail(errc::bad_config, "g3_act needs 10 variables");
    // (g f)(u) = f(g^{-1} u): variable U_j is replaced by u[binv[j]] where
    // binv[j] = (g3^{-1} point map)[j] = kG3PointPerm[kG3PointPerm[j]].
    Poly<R> r(10);
    for (const auto& [m, c] : f.terms) {
        Mono m2(10);
        for (int j = 0; j < 10; ++j) {
            int target = kG3PointPerm[kG3PointPerm[j]];
            m2.e[target] = static_cast<uint8_t>(m2.e[target] + m.e[j]);
        }
        r.add_term(m2, c);
    }
    return r;
}

// g7^j on polynomials: each term picks up zeta^{-j * weight(m)}
template <class R>
Poly<R> g7_act(const Poly<R>& f, const R& zeta, int j = 1) {
    if (f.nvars != 10) fail(errc::bad_config, "g7_act needs 10 variables");
    std::vector<R> zp;
    zp.reserve(7);
    zp.push_back(ring_from_int(zeta, 1));
    for (int i = 1; i < 7; ++i) zp.push_back(zp.back() * zeta);
    Poly<R> r(10);
    for (const auto& [m, c] : f.terms) {
        int w = (g7_weight(m) * j) % 7;
        int neg = (7 - w) % 7;
        r.add_term(m, c * zp[neg]);
    }
    return r;
}

}  // namespace fpp

#endif
