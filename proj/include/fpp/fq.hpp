#ifndef FPP_FQ_HPP
#define FPP_FQ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpp/util.hpp"

namespace fpp {

// ---------------------------------------------------------------------------
// Prime field F_p, p a small odd prime (fits in uint32).
// Elements are self-describing so generic template code can clone them.
// ---------------------------------------------------------------------------

inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + p - b; }
inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}
inline uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}
inline uint32_t fp_inv(uint32_t a, uint32_t p) {
    if (a == 0) fail(errc::internal, "inverse of 0 in F_p");
    return fp_pow(a, p - 2, p);
}
inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a ? p - a : 0; }
// least nonnegative residue of a signed long
inline uint32_t fp_from(long v, uint32_t p) {
    long m = v % static_cast<long>(p);
    if (m < 0) m += p;
    return static_cast<uint32_t>(m);
}

struct FpElt {
    uint32_t v = 0;
    uint32_t p = 0;

    FpElt() = default;
    FpElt(uint32_t value, uint32_t prime) : v(value % prime), p(prime) {}

    bool is_zero() const { return v == 0; }
    friend FpElt operator+(FpElt a, FpElt b) { return {fp_add(a.v, b.v, a.p), a.p}; }
    friend FpElt operator-(FpElt a, FpElt b) { return {fp_sub(a.v, b.v, a.p), a.p}; }
    friend FpElt operator*(FpElt a, FpElt b) { return {fp_mul(a.v, b.v, a.p), a.p}; }
    friend FpElt operator-(FpElt a) { return {fp_neg(a.v, a.p), a.p}; }
    FpElt inv() const { return {fp_inv(v, p), p}; }
    FpElt& operator+=(FpElt b) { v = fp_add(v, b.v, p); return *this; }
    FpElt& operator-=(FpElt b) { v = fp_sub(v, b.v, p); return *this; }
    FpElt& operator*=(FpElt b) { v = fp_mul(v, b.v, p); return *this; }
    friend bool operator==(FpElt a, FpElt b) { return a.v == b.v && a.p == b.p; }
    friend bool operator!=(FpElt a, FpElt b) { return !(a == b); }
};

// ---------------------------------------------------------------------------
// F_{p^k} = F_p[x]/(f), f monic irreducible of degree k.
// Contexts are interned per (p, k): the defining polynomial is a fixed,
// versioned constant per pair so serialized points compare across runs.
// ---------------------------------------------------------------------------

struct FqCtx {
    uint32_t p = 0;
    uint32_t k = 1;
    // coefficients of f below the leading term: f = x^k + fc[k-1] x^{k-1} + ... + fc[0]
    std::vector<uint32_t> fc;

    uint64_t order() const {  // p^k
        uint64_t o = 1;
        for (uint32_t i = 0; i < k; ++i) o *= p;
        return o;
    }
    std::string describe() const;
};

// Interned context for (p, k); k = 1 allowed (fc empty, plain prime field).
const FqCtx* fq_context(uint32_t p, uint32_t k);

struct FqElt {
    const FqCtx* ctx = nullptr;
    std::vector<uint32_t> c;  // length k, power-basis coefficients

    FqElt() = default;
    explicit FqElt(const FqCtx* context) : ctx(context), c(context->k, 0) {}
    FqElt(const FqCtx* context, std::vector<uint32_t> coeffs) : ctx(context), c(std::move(coeffs)) {
        if (c.size() != ctx->k) fail(errc::internal, "FqElt coefficient length");
    }

    static FqElt from_fp(const FqCtx* context, uint32_t v) {
        FqElt e(context);
        e.c[0] = v % context->p;
        return e;
    }
    static FqElt from_int(const FqCtx* context, long v) {
        return from_fp(context, fp_from(v, context->p));
    }

    bool is_zero() const {
        for (uint32_t x : c)
            if (x) return false;
        return true;
    }
    bool in_prime_field() const {
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i]) return false;
        return true;
    }

    friend FqElt operator+(const FqElt& a, const FqElt& b) {
        FqElt r(a.ctx);
        for (uint32_t i = 0; i < a.ctx->k; ++i) r.c[i] = fp_add(a.c[i], b.c[i], a.ctx->p);
        return r;
    }
    friend FqElt operator-(const FqElt& a, const FqElt& b) {
        FqElt r(a.ctx);
        for (uint32_t i = 0; i < a.ctx->k; ++i) r.c[i] = fp_sub(a.c[i], b.c[i], a.ctx->p);
        return r;
    }
    friend FqElt operator-(const FqElt& a) {
        FqElt r(a.ctx);
        for (uint32_t i = 0; i < a.ctx->k; ++i) r.c[i] = fp_neg(a.c[i], a.ctx->p);
        return r;
    }
    friend FqElt operator*(const FqElt& a, const FqElt& b);
    FqElt inv() const;
    FqElt pow(uint64_t e) const;
    FqElt frobenius() const { return pow(ctx->p); }

    FqElt& operator+=(const FqElt& b) { *this = *this + b; return *this; }
    FqElt& operator-=(const FqElt& b) { *this = *this - b; return *this; }
    FqElt& operator*=(const FqElt& b) { *this = *this * b; return *this; }
    friend bool operator==(const FqElt& a, const FqElt& b) { return a.ctx == b.ctx && a.c == b.c; }
    friend bool operator!=(const FqElt& a, const FqElt& b) { return !(a == b); }
};

// Fixed primitive 7th root of unity in F_{p^k}; requires 7 | p^k - 1.
FqElt fq_zeta7(const FqCtx* ctx);

std::string to_string(const FqElt& e);

}  // namespace fpp

#endif
