#include "fpp/poly.hpp"

namespace fpp {

namespace {
void gen_monos(int d, int n, int pos, Mono& cur, std::vector<Mono>& out) {
    if (pos == n - 1) {
        cur.e[pos] = static_cast<uint8_t>(d);
        out.push_back(cur);
        cur.e[pos] = 0;
        return;
    }
    for (int v = d; v >= 0; --v) {
        cur.e[pos] = static_cast<uint8_t>(v);
        gen_monos(d - v, n, pos + 1, cur, out);
    }
    cur.e[pos] = 0;
}
}  // namespace

std::vector<Mono> monomial_basis(int d, int n) {
    if (d < 0 || n < 1) fail(errc::bad_config, "monomial_basis: need d >= 0, n >= 1");
    std::vector<Mono> out;
    Mono cur(static_cast<size_t>(n));
    gen_monos(d, n, 0, cur, out);
    std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
        return MonoLess{}(a, b);
    });
    return out;
}

}  // namespace fpp
