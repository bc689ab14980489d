#ifndef FPP_SCHEME_HPP
#define FPP_SCHEME_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpp/eq_io.hpp"
#include "fpp/poly.hpp"

namespace fpp {

// Projective scheme given by homogeneous equations with Q(sqrt(-7))
// coefficients.  The digest keys pool caches to the exact equation set.
struct Scheme {
    int nproj = 0;  // ambient P^N
    std::vector<Poly<QuadElt>> eqs;
    std::string digest;
    std::optional<int> expected_codim;

    int nvars() const { return nproj + 1; }
};

Scheme make_scheme(std::vector<Poly<QuadElt>> eqs, std::optional<int> expected_codim = {});
Scheme load_scheme(const std::string& path, std::optional<int> expected_codim = {});

// ---------------------------------------------------------------------------
// coefficient reductions; `w_image` is the chosen value of sqrt(-7) in the
// target, required only when some coefficient has a nonzero w-part
// ---------------------------------------------------------------------------

FpElt reduce_quad_fp(const QuadElt& q, uint32_t p, std::optional<uint32_t> w_image);
std::vector<Poly<FpElt>> reduce_eqs_fp(const std::vector<Poly<QuadElt>>& eqs, uint32_t p,
                                       std::optional<uint32_t> w_image);
std::vector<Poly<FqElt>> reduce_eqs_fq(const std::vector<Poly<QuadElt>>& eqs, const FqCtx* ctx,
                                       std::optional<uint32_t> w_image);
std::vector<Poly<PadicElt>> reduce_eqs_padic(const std::vector<Poly<QuadElt>>& eqs,
                                             const PadicRing* ring,
                                             const std::optional<PadicElt>& w_image);

// ---------------------------------------------------------------------------
// projective points
// ---------------------------------------------------------------------------

// scale so the first unit coordinate becomes 1; fails on the zero vector
template <class F>
void normalize_point(std::vector<F>& x) {
    for (auto& c : x) {
        if (!ring_is_zero(c)) {
            F inv = ring_inv(c);
            for (auto& d : x) d *= inv;
            return;
        }
    }
    fail(errc::internal, "cannot normalize the zero vector");
}

inline void normalize_point_padic(std::vector<PadicElt>& x) {
    for (auto& c : x) {
        if (c.is_unit()) {
            PadicElt inv = c.inv();
            for (auto& d : x) d *= inv;
            return;
        }
    }
    fail(errc::internal, "no unit coordinate to normalize at");
}

template <class R>
bool on_scheme(const std::vector<Poly<R>>& eqs, std::span<const R> x) {
    for (const auto& f : eqs)
        if (!ring_is_zero(eval_poly(f, x))) return false;
    return true;
}

}  // namespace fpp

#endif
