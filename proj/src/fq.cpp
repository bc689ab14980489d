#include "fpp/fq.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace fpp {

namespace {

using PolyV = std::vector<uint32_t>;  // dense, low to high, no trailing zeros

void poly_trim(PolyV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyV poly_mul(const PolyV& a, const PolyV& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PolyV r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = fp_add(r[i + j], fp_mul(a[i], b[j], p), p);
    poly_trim(r);
    return r;
}

// remainder of a modulo monic f
PolyV poly_rem(PolyV a, const PolyV& f, uint32_t p) {
    size_t df = f.size() - 1;
    while (a.size() > df) {
        uint32_t c = a.back();
        size_t shift = a.size() - 1 - df;
        if (c) {
            for (size_t i = 0; i < df; ++i) a[shift + i] = fp_sub(a[shift + i], fp_mul(c, f[i], p), p);
        }
        a.pop_back();
        poly_trim(a);
        if (a.size() <= df && (a.empty() || a.size() - 1 < df)) break;
    }
    poly_trim(a);
    return a;
}

PolyV poly_powmod(PolyV base, uint64_t e, const PolyV& f, uint32_t p) {
    PolyV r = {1};
    base = poly_rem(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_rem(poly_mul(r, base, p), f, p);
        base = poly_rem(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

PolyV poly_gcd(PolyV a, PolyV b, uint32_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // make b monic, compute a mod b
        uint32_t lcinv = fp_inv(b.back(), p);
        PolyV bm = b;
        for (auto& c : bm) c = fp_mul(c, lcinv, p);
        PolyV r = a;
        while (r.size() >= bm.size() && !r.empty()) {
            uint32_t c = r.back();
            size_t shift = r.size() - bm.size();
            if (c) {
                for (size_t i = 0; i + 1 < bm.size(); ++i)
                    r[shift + i] = fp_sub(r[shift + i], fp_mul(c, bm[i], p), p);
            }
            r.pop_back();
            poly_trim(r);
        }
        a = b;
        b = r;
    }
    return a;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

bool is_irreducible(const PolyV& f, uint32_t p) {
    size_t k = f.size() - 1;
    // x^{p^k} == x mod f, and gcd(x^{p^{k/q}} - x, f) = 1 for prime q | k
    PolyV x = {0, 1};
    uint64_t pk = 1;
    for (size_t i = 0; i < k; ++i) pk *= p;
    PolyV xq = poly_powmod(x, pk, f, p);
    PolyV diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = fp_sub(diff[1], 1, p);
    poly_trim(diff);
    if (!diff.empty()) return false;
    for (uint64_t q : prime_factors(k)) {
        uint64_t pd = 1;
        for (size_t i = 0; i < k / q; ++i) pd *= p;
        PolyV xd = poly_powmod(x, pd, f, p);
        PolyV d2 = xd;
        if (d2.size() < 2) d2.resize(2, 0);
        d2[1] = fp_sub(d2[1], 1, p);
        poly_trim(d2);
        PolyV g = poly_gcd(f, d2, p);
        if (g.size() > 1) return false;
    }
    return true;
}

bool x_is_primitive(const PolyV& f, uint32_t p) {
    size_t k = f.size() - 1;
    uint64_t order = 1;
    for (size_t i = 0; i < k; ++i) order *= p;
    order -= 1;
    PolyV x = {0, 1};
    for (uint64_t q : prime_factors(order)) {
        PolyV e = poly_powmod(x, order / q, f, p);
        if (e.size() == 1 && e[0] == 1) return false;
    }
    return true;
}

// The versioned constants table: lexicographically smallest monic polynomial
// of degree k over F_p (ordered by coefficient tuple (c_{k-1},...,c_0)) that
// is irreducible with x primitive.  For (11,3) this is x^3 + x + 4.
PolyV find_defining_poly(uint32_t p, uint32_t k) {
    std::vector<uint32_t> idx(k, 0);
    while (true) {
        PolyV f(k + 1, 0);
        f[k] = 1;
        // idx[0] = c_{k-1}, ..., idx[k-1] = c_0
        for (uint32_t i = 0; i < k; ++i) f[k - 1 - i] = idx[i];
        if (is_irreducible(f, p) && x_is_primitive(f, p)) return f;
        // increment
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0) {
            if (++idx[pos] < p) break;
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) fail(errc::internal, "no primitive polynomial found");
    }
}

std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<FqCtx>>& ctx_table() {
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<FqCtx>> t;
    return t;
}
std::mutex& ctx_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

const FqCtx* fq_context(uint32_t p, uint32_t k) {
    if (p < 3 || k < 1) fail(errc::bad_prime, "need odd prime and k >= 1");
    std::lock_guard<std::mutex> lock(ctx_mutex());
    auto& t = ctx_table();
    auto it = t.find({p, k});
    if (it != t.end()) return it->second.get();
    auto ctx = std::make_unique<FqCtx>();
    ctx->p = p;
    ctx->k = k;
    if (k > 1) {
        PolyV f = find_defining_poly(p, k);
        ctx->fc.assign(f.begin(), f.end() - 1);
    }
    const FqCtx* raw = ctx.get();
    t.emplace(std::make_pair(p, k), std::move(ctx));
    return raw;
}

std::string FqCtx::describe() const {
    std::ostringstream os;
    os << "F_" << p;
    if (k > 1) {
        os << "^" << k << " = F_" << p << "[x]/(x^" << k;
        for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
            if (fc[i]) {
                os << " + " << fc[i];
                if (i == 1)
                    os << "*x";
                else if (i > 1)
                    os << "*x^" << i;
            }
        }
        os << ")";
    }
    return os.str();
}

FqElt operator*(const FqElt& a, const FqElt& b) {
    const FqCtx* ctx = a.ctx;
    uint32_t p = ctx->p, k = ctx->k;
    if (k == 1) return FqElt(ctx, {fp_mul(a.c[0], b.c[0], p)});
    std::vector<uint32_t> prod(2 * k - 1, 0);
    for (uint32_t i = 0; i < k; ++i) {
        if (!a.c[i]) continue;
        for (uint32_t j = 0; j < k; ++j)
            prod[i + j] = fp_add(prod[i + j], fp_mul(a.c[i], b.c[j], p), p);
    }
    // reduce by x^k = -fc
    for (int d = static_cast<int>(2 * k - 2); d >= static_cast<int>(k); --d) {
        uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (uint32_t i = 0; i < k; ++i)
            prod[d - k + i] = fp_sub(prod[d - k + i], fp_mul(c, ctx->fc[i], p), p);
    }
    prod.resize(k);
    return FqElt(ctx, std::move(prod));
}

FqElt FqElt::pow(uint64_t e) const {
    FqElt r = FqElt::from_fp(ctx, 1);
    FqElt base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FqElt FqElt::inv() const {
    if (is_zero()) fail(errc::internal, "inverse of 0 in F_q");
    // x^(q-2); fields here are tiny, no need for extended euclid
    return pow(ctx->order() - 2);
}

FqElt fq_zeta7(const FqCtx* ctx) {
    uint64_t q = ctx->order();
    if ((q - 1) % 7 != 0)
        fail(errc::no_seventh_root, ctx->describe() + " has no primitive 7th root of unity");
    FqElt gen(ctx);
    if (ctx->k == 1) {
        // smallest generator of F_p^*
        uint32_t p = ctx->p;
        auto fs = prime_factors(p - 1);
        for (uint32_t g = 2; g < p; ++g) {
            bool prim = true;
            for (uint64_t f : fs)
                if (fp_pow(g, (p - 1) / f, p) == 1) { prim = false; break; }
            if (prim) { gen = FqElt::from_fp(ctx, g); break; }
        }
    } else {
        gen = FqElt(ctx);
        gen.c[1] = 1;  // x is primitive by construction of the defining poly
    }
    FqElt z = gen.pow((q - 1) / 7);
    return z;
}

std::string to_string(const FqElt& e) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < e.c.size(); ++i) {
        if (i) os << ",";
        os << e.c[i];
    }
    os << "]";
    return os.str();
}

}  // namespace fpp
