#include "fpp/zpe.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

namespace fpp {

namespace {

std::map<std::tuple<uint32_t, uint32_t, uint32_t>, std::unique_ptr<PadicRing>>& ring_table() {
    static std::map<std::tuple<uint32_t, uint32_t, uint32_t>, std::unique_ptr<PadicRing>> t;
    return t;
}
std::mutex& ring_mutex() {
    static std::mutex m;
    return m;
}

Int pow_int(uint32_t p, uint32_t e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

Int mod_pe(const Int& v, const Int& pe) {
    Int r = v % pe;
    if (r < 0) r += pe;
    return r;
}

}  // namespace

const PadicRing* padic_ring(uint32_t p, uint32_t e, uint32_t k) {
    if (p < 3) fail(errc::bad_prime, "p must be an odd prime");
    if (e < 1 || k < 1) fail(errc::bad_config, "need e >= 1, k >= 1");
    std::lock_guard<std::mutex> lock(ring_mutex());
    auto& t = ring_table();
    auto key = std::make_tuple(p, e, k);
    auto it = t.find(key);
    if (it != t.end()) return it->second.get();
    auto r = std::make_unique<PadicRing>();
    r->p = p;
    r->e = e;
    r->k = k;
    r->pe = pow_int(p, e);
    r->residue = fq_context(p, k);
    r->fc = r->residue->fc;
    const PadicRing* raw = r.get();
    t.emplace(key, std::move(r));
    return raw;
}

std::string PadicRing::describe() const {
    std::ostringstream os;
    os << p << "^" << e << ":" << k;
    return os.str();
}

PadicElt::PadicElt(const PadicRing* r, std::vector<Int> coeffs) : ring(r), c(std::move(coeffs)) {
    if (c.size() != r->k) fail(errc::internal, "PadicElt coefficient length");
    for (auto& x : c) x = mod_pe(x, r->pe);
}

PadicElt PadicElt::from_int(const PadicRing* r, const Int& v) {
    PadicElt x(r);
    x.c[0] = mod_pe(v, r->pe);
    return x;
}

PadicElt PadicElt::from_residue(const PadicRing* r, const FqElt& v) {
    if (v.ctx->p != r->p || v.ctx->k != r->k) fail(errc::internal, "residue field mismatch");
    PadicElt x(r);
    for (uint32_t i = 0; i < r->k; ++i) x.c[i] = v.c[i];
    return x;
}

bool PadicElt::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

uint32_t int_valuation(const Int& v, uint32_t p, uint32_t cap) {
    if (v == 0) return cap;
    Int t = v;
    uint32_t val = 0;
    while (val < cap && mpz_divisible_ui_p(t.get_mpz_t(), p)) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
        ++val;
    }
    return val;
}

uint32_t PadicElt::valuation() const {
    uint32_t best = ring->e;
    for (const auto& x : c) {
        uint32_t v = int_valuation(x, ring->p, ring->e);
        if (v < best) best = v;
        if (best == 0) break;
    }
    return best;
}

FqElt PadicElt::reduce_mod_p() const {
    FqElt r(ring->residue);
    for (uint32_t i = 0; i < ring->k; ++i)
        r.c[i] = static_cast<uint32_t>(mpz_fdiv_ui(c[i].get_mpz_t(), ring->p));
    return r;
}

PadicElt PadicElt::to_precision(uint32_t d) const {
    if (d == ring->e) return *this;
    const PadicRing* r2 = padic_ring(ring->p, d, ring->k);
    PadicElt x(r2);
    for (uint32_t i = 0; i < ring->k; ++i) x.c[i] = mod_pe(c[i], r2->pe);
    return x;
}

PadicElt operator+(const PadicElt& a, const PadicElt& b) {
    if (a.ring != b.ring) fail(errc::internal, "ring mismatch in +");
    PadicElt r(a.ring);
    for (uint32_t i = 0; i < a.ring->k; ++i) r.c[i] = mod_pe(a.c[i] + b.c[i], a.ring->pe);
    return r;
}

PadicElt operator-(const PadicElt& a, const PadicElt& b) {
    if (a.ring != b.ring) fail(errc::internal, "ring mismatch in -");
    PadicElt r(a.ring);
    for (uint32_t i = 0; i < a.ring->k; ++i) r.c[i] = mod_pe(a.c[i] - b.c[i], a.ring->pe);
    return r;
}

PadicElt operator-(const PadicElt& a) {
    PadicElt r(a.ring);
    for (uint32_t i = 0; i < a.ring->k; ++i) r.c[i] = a.c[i] == 0 ? Int(0) : a.ring->pe - a.c[i];
    return r;
}

PadicElt operator*(const PadicElt& a, const PadicElt& b) {
    if (a.ring != b.ring) fail(errc::internal, "ring mismatch in *");
    const PadicRing* R = a.ring;
    uint32_t k = R->k;
    if (k == 1) {
        PadicElt r(R);
        r.c[0] = mod_pe(a.c[0] * b.c[0], R->pe);
        return r;
    }
    std::vector<Int> prod(2 * k - 1, Int(0));
    for (uint32_t i = 0; i < k; ++i) {
        if (a.c[i] == 0) continue;
        for (uint32_t j = 0; j < k; ++j) prod[i + j] += a.c[i] * b.c[j];
    }
    // reduce by x^k = -fc
    for (int d = static_cast<int>(2 * k - 2); d >= static_cast<int>(k); --d) {
        Int coeff = prod[d];
        if (coeff == 0) continue;
        prod[d] = 0;
        for (uint32_t i = 0; i < k; ++i) prod[d - k + i] -= coeff * R->fc[i];
    }
    PadicElt r(R);
    for (uint32_t i = 0; i < k; ++i) r.c[i] = mod_pe(prod[i], R->pe);
    return r;
}

PadicElt PadicElt::div_by_p_pow(uint32_t m) const {
    if (m == 0) return *this;
    Int pm = pow_int(ring->p, m);
    PadicElt r(ring);
    for (uint32_t i = 0; i < ring->k; ++i) {
        if (!mpz_divisible_p(c[i].get_mpz_t(), pm.get_mpz_t()))
            fail(errc::internal, "inexact division by p^m");
        mpz_divexact(r.c[i].get_mpz_t(), c[i].get_mpz_t(), pm.get_mpz_t());
    }
    return r;
}

PadicElt PadicElt::times_p_pow(uint32_t m) const {
    if (m == 0) return *this;
    Int pm = pow_int(ring->p, m);
    PadicElt r(ring);
    for (uint32_t i = 0; i < ring->k; ++i) r.c[i] = mod_pe(c[i] * pm, ring->pe);
    return r;
}

PadicElt PadicElt::inv() const {
    if (!is_unit()) fail(errc::internal, "inverse of a non-unit");
    // invert in the residue field, then Newton: x <- x(2 - a x)
    FqElt r0 = reduce_mod_p().inv();
    PadicElt x = PadicElt::from_residue(ring, r0);
    PadicElt two = PadicElt::from_int(ring, 2);
    uint32_t prec = 1;
    while (prec < ring->e) {
        x = x * (two - *this * x);
        prec *= 2;
    }
    return x;
}

std::string to_string(const PadicElt& x) {
    std::ostringstream os;
    os << x.ring->p << "^" << x.ring->e << ":" << x.ring->k << ":[";
    for (uint32_t i = 0; i < x.ring->k; ++i) {
        if (i) os << ",";
        os << x.c[i].get_str();
    }
    os << "]";
    return os.str();
}

PadicElt hensel_sqrt(const PadicElt& a, bool other_branch) {
    const PadicRing* R = a.ring;
    if (R->k != 1) fail(errc::bad_config, "hensel_sqrt expects k = 1");
    uint32_t p = R->p;
    if (a.valuation() > 0)
        fail(errc::ramified, "square root of a non-unit (valuation > 0)");
    uint32_t a0 = static_cast<uint32_t>(mpz_fdiv_ui(a.c[0].get_mpz_t(), p));
    // root mod p by scan; p is small here
    uint32_t r0 = 0;
    bool found = false;
    for (uint32_t x = 0; x < p; ++x) {
        if (fp_mul(x, x, p) == a0) {
            r0 = x;
            found = true;
            break;
        }
    }
    if (!found) fail(errc::not_a_residue, "not a quadratic residue mod p");
    // branch selection at precision 1: smaller representative by default
    uint32_t alt = p - r0;
    uint32_t lo = std::min(r0, alt), hi = std::max(r0, alt);
    uint32_t branch = other_branch ? hi : lo;
    // linear lifting: x_{d+1} = x_d + p^d t with 2 x0 t = (a - x_d^2)/p^d mod p
    Int x(branch);
    Int pd(p);
    uint32_t inv2x = fp_inv(fp_mul(2 % p, branch % p, p), p);
    for (uint32_t d = 1; d < R->e; ++d) {
        Int res = mod_pe(a.c[0] - x * x, R->pe);
        Int q;
        if (!mpz_divisible_p(res.get_mpz_t(), pd.get_mpz_t()))
            fail(errc::internal, "hensel_sqrt: residual not divisible");
        mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), pd.get_mpz_t());
        uint32_t t = fp_mul(static_cast<uint32_t>(mpz_fdiv_ui(q.get_mpz_t(), p)), inv2x, p);
        x += pd * t;
        pd *= p;
    }
    PadicElt out(R);
    out.c[0] = mod_pe(x, R->pe);
    return out;
}

PadicElt embed_rat(const Rat& r, const PadicRing* ring) {
    Int num = r.get_num(), den = r.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), ring->p))
        fail(errc::bad_prime, "denominator divisible by p");
    PadicElt n = PadicElt::from_int(ring, num);
    PadicElt d = PadicElt::from_int(ring, den);
    return n * d.inv();
}

PadicElt embed_quad(const QuadElt& q, const PadicElt& branch) {
    const PadicRing* R = branch.ring;
    return embed_rat(q.a, R) + embed_rat(q.b, R) * branch;
}

PadicElt padic_zeta7(const PadicRing* ring) {
    FqElt z0 = fq_zeta7(ring->residue);
    // Newton on x^7 - 1: x <- x - (x^7 - 1)/(7 x^6); 7 x0^6 is a unit since
    // p != 7 and x0 != 0.
    PadicElt z = PadicElt::from_residue(ring, z0);
    PadicElt one = PadicElt::from_int(ring, 1);
    PadicElt seven = PadicElt::from_int(ring, 7);
    uint32_t prec = 1;
    while (prec < ring->e) {
        PadicElt z2 = z * z;
        PadicElt z4 = z2 * z2;
        PadicElt z6 = z4 * z2;
        PadicElt f = z6 * z - one;
        PadicElt df = seven * z6;
        z = z - f * df.inv();
        prec *= 2;
    }
    return z;
}

Int crt_pair(const Int& a, const Int& m1, const Int& b, const Int& m2) {
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
    if (g != 1) fail(errc::bad_config, "moduli not coprime");
    Int m = m1 * m2;
    // x = a + m1 * ((b - a) * s mod m2)
    Int diff = b - a;
    Int k = (diff * s) % m2;
    if (k < 0) k += m2;
    Int x = (a + m1 * k) % m;
    if (x < 0) x += m;
    return x;
}

}  // namespace fpp
