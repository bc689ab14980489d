#ifndef FPP_POLY_HPP
#define FPP_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "fpp/arith.hpp"
#include "fpp/fq.hpp"
#include "fpp/util.hpp"
#include "fpp/zpe.hpp"

namespace fpp {

// ---------------------------------------------------------------------------
// ring element helpers (overload set used by the generic templates)
// ---------------------------------------------------------------------------

inline bool ring_is_zero(const Rat& x) { return x == 0; }
inline bool ring_is_zero(const QuadElt& x) { return x.is_zero(); }
inline bool ring_is_zero(const FpElt& x) { return x.is_zero(); }
inline bool ring_is_zero(const FqElt& x) { return x.is_zero(); }
inline bool ring_is_zero(const PadicElt& x) { return x.is_zero(); }
inline bool ring_is_zero(const Int& x) { return x == 0; }

inline Rat ring_from_int(const Rat&, long v) { return Rat(v); }
inline QuadElt ring_from_int(const QuadElt&, long v) { return QuadElt(v); }
inline FpElt ring_from_int(const FpElt& like, long v) { return {fp_from(v, like.p), like.p}; }
inline FqElt ring_from_int(const FqElt& like, long v) { return FqElt::from_int(like.ctx, v); }
inline PadicElt ring_from_int(const PadicElt& like, long v) {
    return PadicElt::from_int(like.ring, v);
}
inline Int ring_from_int(const Int&, long v) { return Int(v); }

inline Rat ring_inv(const Rat& x) {
    if (x == 0) fail(errc::internal, "inverse of zero");
    return 1 / x;
}
inline QuadElt ring_inv(const QuadElt& x) { return QuadElt(1L) / x; }
inline FpElt ring_inv(const FpElt& x) { return x.inv(); }
inline FqElt ring_inv(const FqElt& x) { return x.inv(); }
inline PadicElt ring_inv(const PadicElt& x) { return x.inv(); }

// ---------------------------------------------------------------------------
// Monomials, graded-lex ordered: lower total degree first; within a degree
// the lexicographically larger exponent vector comes first, so U0^d leads.
// ---------------------------------------------------------------------------

struct Mono {
    std::vector<uint8_t> e;

    Mono() = default;
    explicit Mono(size_t nvars) : e(nvars, 0) {}
    explicit Mono(std::vector<uint8_t> exps) : e(std::move(exps)) {}

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    size_t nvars() const { return e.size(); }

    Mono operator*(const Mono& m) const {
        Mono r(e.size());
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<uint8_t>(e[i] + m.e[i]);
        return r;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e > b.e;  // larger exponent vector first within a degree
    }
};

// All monomials of total degree d in n variables, in the fixed order above.
std::vector<Mono> monomial_basis(int d, int n);

// ---------------------------------------------------------------------------
// Sparse multivariate polynomial over a coefficient ring R.
// ---------------------------------------------------------------------------

template <class R>
struct Poly {
    int nvars = 0;
    std::map<Mono, R, MonoLess> terms;

    Poly() = default;
    explicit Poly(int n) : nvars(n) {}

    bool is_zero() const { return terms.empty(); }
    size_t nterms() const { return terms.size(); }

    void add_term(const Mono& m, const R& c) {
        if (ring_is_zero(c)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (ring_is_zero(it->second)) terms.erase(it);
        }
    }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [m, c] : terms) {
            if (d < 0)
                d = m.degree();
            else if (m.degree() != d)
                return false;
        }
        return true;
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        Poly r = f;
        for (const auto& [m, c] : g.terms) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& f, const Poly& g) {
        Poly r = f;
        for (const auto& [m, c] : g.terms) r.add_term(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        Poly r(f.nvars);
        for (const auto& [m1, c1] : f.terms)
            for (const auto& [m2, c2] : g.terms) r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    Poly operator*(const R& s) const {
        Poly r(nvars);
        for (const auto& [m, c] : terms) r.add_term(m, c * s);
        return r;
    }
    friend Poly operator-(const Poly& f) {
        Poly r(f.nvars);
        for (const auto& [m, c] : f.terms) r.terms.emplace(m, -c);
        return r;
    }
    friend bool operator==(const Poly& f, const Poly& g) {
        return f.nvars == g.nvars && f.terms == g.terms;
    }

    // d/dU_i
    Poly partial(int i) const {
        Poly r(nvars);
        for (const auto& [m, c] : terms) {
            if (m.e[i] == 0) continue;
            Mono m2 = m;
            m2.e[i]--;
            r.add_term(m2, c * ring_from_int(c, m.e[i]));
        }
        return r;
    }
};

// exact evaluation; powers of the coordinates are cached per call
template <class R>
R eval_poly(const Poly<R>& f, std::span<const R> x) {
    if (static_cast<int>(x.size()) != f.nvars) fail(errc::internal, "eval: nvars mismatch");
    if (f.terms.empty()) {
        if (x.empty()) fail(errc::internal, "eval: cannot synthesize zero with no context");
        return ring_from_int(x[0], 0);
    }
    R zero = ring_from_int(x[0], 0);
    R one = ring_from_int(x[0], 1);
    int maxd = 0;
    for (const auto& [m, c] : f.terms)
        for (auto e : m.e) maxd = std::max<int>(maxd, e);
    std::vector<std::vector<R>> pw(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        pw[i].reserve(maxd + 1);
        pw[i].push_back(one);
        for (int d = 1; d <= maxd; ++d) pw[i].push_back(pw[i].back() * x[i]);
    }
    R acc = zero;
    for (const auto& [m, c] : f.terms) {
        R t = c;
        for (size_t i = 0; i < x.size(); ++i)
            if (m.e[i]) t *= pw[i][m.e[i]];
        acc += t;
    }
    return acc;
}

template <class R>
std::vector<R> gradient(const Poly<R>& f, std::span<const R> x) {
    std::vector<R> g;
    g.reserve(f.nvars);
    for (int i = 0; i < f.nvars; ++i) g.push_back(eval_poly(f.partial(i), x));
    return g;
}

// coefficientwise transport into another ring
template <class S, class R, class Fn>
Poly<S> map_poly(const Poly<R>& f, Fn&& fn) {
    Poly<S> r(f.nvars);
    for (const auto& [m, c] : f.terms) {
        S v = fn(c);
        if (!ring_is_zero(v)) r.terms.emplace(m, std::move(v));
    }
    return r;
}

// substitution of truncated polynomial arguments (formal-neighborhood work):
// truncates past total degree `maxdeg` at every step
template <class R>
Poly<R> mul_trunc(const Poly<R>& f, const Poly<R>& g, int maxdeg) {
    Poly<R> r(f.nvars);
    for (const auto& [m1, c1] : f.terms) {
        if (m1.degree() > maxdeg) continue;
        for (const auto& [m2, c2] : g.terms) {
            if (m1.degree() + m2.degree() > maxdeg) continue;
            r.add_term(m1 * m2, c1 * c2);
        }
    }
    return r;
}

template <class R>
Poly<R> subst_trunc(const Poly<R>& f, std::span<const Poly<R>> args, int maxdeg, int out_nvars) {
    if (static_cast<int>(args.size()) != f.nvars) fail(errc::internal, "subst: nvars mismatch");
    Poly<R> acc(out_nvars);
    int maxe = 0;
    for (const auto& [m, c] : f.terms)
        for (auto e : m.e) maxe = std::max<int>(maxe, e);
    // power cache
    std::vector<std::vector<Poly<R>>> pw(args.size());
    for (size_t i = 0; i < args.size(); ++i) {
        Poly<R> one(out_nvars);
        if (!f.terms.empty())
            one.add_term(Mono(static_cast<size_t>(out_nvars)),
                         ring_from_int(f.terms.begin()->second, 1));
        pw[i].push_back(one);
        for (int d = 1; d <= maxe; ++d) pw[i].push_back(mul_trunc(pw[i].back(), args[i], maxdeg));
    }
    for (const auto& [m, c] : f.terms) {
        Poly<R> t(out_nvars);
        t.add_term(Mono(static_cast<size_t>(out_nvars)), c);
        for (size_t i = 0; i < args.size(); ++i)
            if (m.e[i]) t = mul_trunc(t, pw[i][m.e[i]], maxdeg);
        acc = acc + t;
    }
    return acc;
}

}  // namespace fpp

#endif
