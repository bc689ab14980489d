#include "fpp/scheme.hpp"

namespace fpp {

Scheme make_scheme(std::vector<Poly<QuadElt>> eqs, std::optional<int> expected_codim) {
    if (eqs.empty()) fail(errc::bad_config, "scheme with no equations");
    int nvars = eqs[0].nvars;
    for (const auto& f : eqs) {
        if (f.nvars != nvars) fail(errc::bad_config, "equations disagree on variable count");
        if (!f.is_homogeneous()) fail(errc::degree_mismatch, "scheme equation not homogeneous");
        if (f.is_zero()) fail(errc::bad_config, "zero equation in scheme");
    }
    Scheme s;
    s.nproj = nvars - 1;
    s.eqs = std::move(eqs);
    s.digest = hex64(fnv1a(serialize_equations(s.eqs)));
    s.expected_codim = expected_codim;
    return s;
}

Scheme load_scheme(const std::string& path, std::optional<int> expected_codim) {
    return make_scheme(load_equation_file(path), expected_codim);
}

FpElt reduce_quad_fp(const QuadElt& q, uint32_t p, std::optional<uint32_t> w_image) {
    auto embed_rat_fp = [&](const Rat& r) -> uint32_t {
        Int num = r.get_num(), den = r.get_den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), p))
            fail(errc::bad_prime, "denominator divisible by p");
        uint32_t n = static_cast<uint32_t>(mpz_fdiv_ui(num.get_mpz_t(), p));
        uint32_t d = static_cast<uint32_t>(mpz_fdiv_ui(den.get_mpz_t(), p));
        return fp_mul(n, fp_inv(d, p), p);
    };
    uint32_t a = embed_rat_fp(q.a);
    if (q.b == 0) return {a, p};
    if (!w_image) fail(errc::bad_config, "coefficient needs sqrt(-7) mod p but no branch given");
    uint32_t b = embed_rat_fp(q.b);
    return {fp_add(a, fp_mul(b, *w_image % p, p), p), p};
}

std::vector<Poly<FpElt>> reduce_eqs_fp(const std::vector<Poly<QuadElt>>& eqs, uint32_t p,
                                       std::optional<uint32_t> w_image) {
    std::vector<Poly<FpElt>> out;
    out.reserve(eqs.size());
    for (const auto& f : eqs)
        out.push_back(map_poly<FpElt>(f, [&](const QuadElt& q) {
            return reduce_quad_fp(q, p, w_image);
        }));
    return out;
}

std::vector<Poly<FqElt>> reduce_eqs_fq(const std::vector<Poly<QuadElt>>& eqs, const FqCtx* ctx,
                                       std::optional<uint32_t> w_image) {
    std::vector<Poly<FqElt>> out;
    out.reserve(eqs.size());
    for (const auto& f : eqs)
        out.push_back(map_poly<FqElt>(f, [&](const QuadElt& q) {
            FpElt v = reduce_quad_fp(q, ctx->p, w_image);
            return FqElt::from_fp(ctx, v.v);
        }));
    return out;
}

std::vector<Poly<PadicElt>> reduce_eqs_padic(const std::vector<Poly<QuadElt>>& eqs,
                                             const PadicRing* ring,
                                             const std::optional<PadicElt>& w_image) {
    std::vector<Poly<PadicElt>> out;
    out.reserve(eqs.size());
    for (const auto& f : eqs)
        out.push_back(map_poly<PadicElt>(f, [&](const QuadElt& q) {
            if (q.b == 0) return embed_rat(q.a, ring);
            if (!w_image)
                fail(errc::bad_config, "coefficient needs sqrt(-7) but no branch given");
            return embed_quad(q, *w_image);
        }));
    return out;
}

}  // namespace fpp
