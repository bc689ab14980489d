#ifndef FPP_UTIL_HPP
#define FPP_UTIL_HPP

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fpp {

enum class errc {
    not_a_residue,
    ramified,
    bad_prime,
    parse_error,
    degree_mismatch,
    no_seventh_root,
    budget_exceeded,
    not_on_scheme,
    empty_sample,
    singular_point,
    inconsistent_lift,
    singular_seed,
    inconsistent,
    cut_not_rigid,
    count_too_large,
    precision_exhausted,
    dependent_basis,
    no_unit_entry,
    seed_shortage,
    fixture_mismatch,
    dataset_missing,
    bad_config,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_a_residue: return "NotAResidue";
        case errc::ramified: return "Ramified";
        case errc::bad_prime: return "BadPrime";
        case errc::parse_error: return "ParseError";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::no_seventh_root: return "NoSeventhRoot";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::not_on_scheme: return "NotOnScheme";
        case errc::empty_sample: return "EmptySample";
        case errc::singular_point: return "SingularPoint";
        case errc::inconsistent_lift: return "InconsistentLift";
        case errc::singular_seed: return "SingularSeed";
        case errc::inconsistent: return "Inconsistent";
        case errc::cut_not_rigid: return "CutNotRigid";
        case errc::count_too_large: return "CountTooLarge";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::dependent_basis: return "DependentBasis";
        case errc::no_unit_entry: return "NoUnitEntry";
        case errc::seed_shortage: return "SeedShortage";
        case errc::fixture_mismatch: return "FixtureMismatch";
        case errc::dataset_missing: return "DatasetMissing";
        case errc::bad_config: return "BadConfig";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// FNV-1a, used for content digests of equation sets and pool cache keys.
// Stability across runs matters here, cryptographic strength does not.
inline uint64_t fnv1a(std::string_view data, uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

class stopwatch {
  public:
    stopwatch() : start_(clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_;
};

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

// Deterministic 64-bit PRNG (splitmix64); used wherever "seeded" choices are
// required so runs are reproducible across platforms.
class rng64 {
  public:
    explicit rng64(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  private:
    uint64_t state_;
};

}  // namespace fpp

#endif
