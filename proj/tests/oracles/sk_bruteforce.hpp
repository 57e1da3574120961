// Exhaustive search over {H, T, T^dag} words, independent of the library's
// deduplicated net. Words are visited by length, then lexicographically with
// H < T < T^dag, and a later word wins only if it is closer by more than 1e-12.
#ifndef LATSURG_TESTS_SK_BRUTEFORCE_HPP
#define LATSURG_TESTS_SK_BRUTEFORCE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using c2 = std::array<std::complex<double>, 4>;  // row-major 2x2

inline c2 mul(const c2& a, const c2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

// |tr(u^dag v)| is invariant under global phases, so no projection is needed.
inline double phase_free_distance(const c2& u, const c2& v) {
    const auto tr = std::conj(u[0]) * v[0] + std::conj(u[2]) * v[2] + std::conj(u[1]) * v[1] +
                    std::conj(u[3]) * v[3];
    return std::sqrt(std::max(0.0, 2.0 - std::abs(tr)) / 2.0);
}

struct BruteResult {
    std::vector<int> word;  // 0 = H, 1 = T, 2 = T^dag; word[0] applied first
    double distance{0};
};

inline BruteResult brute_force_base(const c2& target, int max_len) {
    const double r = 1 / std::sqrt(2.0);
    const std::array<c2, 3> gates{
        c2{r, r, r, -r},
        c2{1, 0, 0, std::polar(1.0, M_PI / 4)},
        c2{1, 0, 0, std::polar(1.0, -M_PI / 4)},
    };
    BruteResult best{{}, phase_free_distance(target, c2{1, 0, 0, 1})};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> word(static_cast<std::size_t>(len), 0);
        while (true) {
            c2 m{1, 0, 0, 1};
            for (const int g : word)
                m = mul(gates[static_cast<std::size_t>(g)], m);
            const double d = phase_free_distance(target, m);
            if (d < best.distance - 1e-12)
                best = {word, d};
            int k = len - 1;
            while (k >= 0 && word[static_cast<std::size_t>(k)] == 2)
                word[static_cast<std::size_t>(k--)] = 0;
            if (k < 0)
                break;
            ++word[static_cast<std::size_t>(k)];
        }
    }
    return best;
}

}  // namespace oracle

#endif  // LATSURG_TESTS_SK_BRUTEFORCE_HPP
