#ifndef MODOP_RNG_HPP
#define MODOP_RNG_HPP

#include <cstdint>
#include <vector>

namespace modop {

// Small deterministic generator (splitmix64). Test suites and fuzz reports
// must be byte-identical for a given seed, so we do not rely on
// implementation-defined <random> distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    // uniform in [lo, hi] inclusive
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

    bool coin() { return (next() & 1u) != 0; }

    template <class T>
    const T& pick(const std::vector<T>& v) { return v[below(static_cast<int>(v.size()))]; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            int j = below(i + 1);
            std::swap(v[i], v[j]);
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace modop

#endif
