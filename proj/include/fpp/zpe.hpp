#ifndef FPP_ZPE_HPP
#define FPP_ZPE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpp/arith.hpp"
#include "fpp/fq.hpp"
#include "fpp/util.hpp"

namespace fpp {

// ---------------------------------------------------------------------------
// Truncated p-adic ring (Z/p^e)[x]/(f), f monic of degree k irreducible mod p
// (k = 1 gives plain Z/p^e).  The defining polynomial is shared with the
// residue field F_{p^k} so reduction mod p is coefficientwise.
// ---------------------------------------------------------------------------

struct PadicRing {
    uint32_t p = 0;
    uint32_t e = 1;
    uint32_t k = 1;
    std::vector<uint32_t> fc;  // non-leading coefficients of f (empty for k = 1)
    Int pe;                    // p^e
    const FqCtx* residue = nullptr;

    std::string describe() const;
};

const PadicRing* padic_ring(uint32_t p, uint32_t e, uint32_t k = 1);

struct PadicElt {
    const PadicRing* ring = nullptr;
    std::vector<Int> c;  // length k, entries in [0, p^e)

    PadicElt() = default;
    explicit PadicElt(const PadicRing* r) : ring(r), c(r->k, Int(0)) {}
    PadicElt(const PadicRing* r, std::vector<Int> coeffs);

    static PadicElt from_int(const PadicRing* r, const Int& v);
    static PadicElt from_int(const PadicRing* r, long v) { return from_int(r, Int(v)); }
    // digit injection: residue-field element with the same power-basis coords
    static PadicElt from_residue(const PadicRing* r, const FqElt& x);

    bool is_zero() const;
    // v(x) = min over coefficients of their p-valuation, capped at e
    uint32_t valuation() const;
    bool is_unit() const { return valuation() == 0; }

    FqElt reduce_mod_p() const;
    PadicElt to_precision(uint32_t d) const;  // reduce into padic_ring(p, d, k)

    PadicElt inv() const;                       // unit only
    PadicElt div_by_p_pow(uint32_t m) const;    // exact; all coefficients must be divisible
    PadicElt times_p_pow(uint32_t m) const;

    friend PadicElt operator+(const PadicElt& a, const PadicElt& b);
    friend PadicElt operator-(const PadicElt& a, const PadicElt& b);
    friend PadicElt operator-(const PadicElt& a);
    friend PadicElt operator*(const PadicElt& a, const PadicElt& b);
    PadicElt& operator+=(const PadicElt& b) { *this = *this + b; return *this; }
    PadicElt& operator-=(const PadicElt& b) { *this = *this - b; return *this; }
    PadicElt& operator*=(const PadicElt& b) { *this = *this * b; return *this; }
    friend bool operator==(const PadicElt& a, const PadicElt& b) {
        return a.ring == b.ring && a.c == b.c;
    }
    friend bool operator!=(const PadicElt& a, const PadicElt& b) { return !(a == b); }
};

// Serialized as p^e:k:[c0,c1,...] in reports.
std::string to_string(const PadicElt& x);

// Square root of a unit a in Z/p^e (k = 1), p odd.  The branch is selected at
// precision 1: by default the root with the smaller representative in [0,p),
// `other_branch` picks the complement.  Throws NotAResidue / Ramified.
PadicElt hensel_sqrt(const PadicElt& a, bool other_branch = false);

// q.a + q.b * branch computed in the ring of `branch`; BadPrime if a
// denominator is divisible by p.
PadicElt embed_quad(const QuadElt& q, const PadicElt& branch);

PadicElt embed_rat(const Rat& r, const PadicRing* ring);

// Fixed primitive 7th root of unity lifted into the ring; requires
// 7 | p^k - 1.
PadicElt padic_zeta7(const PadicRing* ring);

// Chinese remainder: combined residue mod m1*m2 for coprime moduli.
Int crt_pair(const Int& a, const Int& m1, const Int& b, const Int& m2);

// p-valuation of an integer, capped at `cap`.
uint32_t int_valuation(const Int& v, uint32_t p, uint32_t cap);

}  // namespace fpp

#endif
