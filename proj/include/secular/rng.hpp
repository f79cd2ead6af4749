#pragma once
// Counter-based pseudo-random generator. The state is (key, counter), and each
// output is a strong 64-bit mix of the pair, so any stream position can be
// addressed directly. Streams derived via split() are independent of each other
// and of thread scheduling, which keeps parallel sampling byte-reproducible.
#include <complex>
#include <cstdint>
#include <cmath>
#include <utility>

namespace secular {

namespace detail {
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace detail

class CounterRng {
  public:
    explicit CounterRng(uint64_t key, uint64_t counter = 0) : key_(key), ctr_(counter) {}

    uint64_t next_u64() {
        uint64_t v = detail::mix64(key_ ^ detail::mix64(ctr_ + 0x632be59bd9b4e019ULL));
        ++ctr_;
        return v;
    }

    // child stream whose outputs are unrelated to this stream's
    CounterRng split(uint64_t index) const {
        uint64_t child_key = detail::mix64(key_ + 0x9e3779b97f4a7c15ULL * (index + 1));
        return CounterRng(child_key ^ detail::mix64(index), 0);
    }

    // uniform in [0, 1)
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // standard normal pair (Box-Muller)
    std::pair<double, double> next_gaussian_pair() {
        double u1 = next_unit();
        while (u1 <= 0.0) u1 = next_unit();
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

    uint64_t key() const { return key_; }
    uint64_t counter() const { return ctr_; }

  private:
    uint64_t key_;
    uint64_t ctr_;
};


// Result of a Monte-Carlo estimator: sample mean plus its standard error.
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long long samples = 0;
};

struct McComplexEstimate {
    std::complex<double> mean{0.0, 0.0};
    double std_error = 0.0;
    long long samples = 0;
};

} // namespace secular
