#ifndef FPP_POOL_HPP
#define FPP_POOL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpp/scheme.hpp"

namespace fpp {

struct SliceStrategy {
    int dim = 7;
    int count = 1;
};

struct EnumOptions {
    std::optional<SliceStrategy> slice;     // nullopt = full scan
    uint64_t budget = 30'000'000'000ull;    // candidate budget
    uint64_t seed = 1;
    bool orbit_reduce_g3 = true;            // scan one <g3>-orbit representative
    bool parallel = true;
};

// Cached set of F_p-rational points of a projective scheme, with per-point
// Jacobian rank.  Point coordinates are normalized (first nonzero = 1).
struct Pool {
    uint32_t p = 0;
    std::string scheme_digest;
    std::string strategy;
    uint64_t seed = 0;
    std::vector<std::vector<uint32_t>> pts;
    std::vector<uint32_t> jrank;

    size_t size() const { return pts.size(); }
};

// total number of normalized candidates in P^N(F_p) = (p^{N+1}-1)/(p-1)
uint64_t full_scan_candidates(uint32_t p, int nproj);

Pool enumerate_pool(const Scheme& s, uint32_t p, std::optional<uint32_t> w_image,
                    const EnumOptions& opt);

// independent reference scan (generic evaluator, single thread); used by the
// tests and the benchmark to validate the compiled kernel
std::vector<std::vector<uint32_t>> enumerate_full_serial(const std::vector<Poly<FpElt>>& eqs,
                                                         int nproj, uint32_t p);

// plain-text pool cache
void save_pool_cache(const std::string& path, const Pool& pool);
std::optional<Pool> load_pool_cache(const std::string& path, const std::string& digest,
                                    uint32_t p, const std::string& strategy, uint64_t seed);
std::string pool_cache_filename(const std::string& digest, uint32_t p,
                                const std::string& strategy, uint64_t seed);

}  // namespace fpp

#endif
