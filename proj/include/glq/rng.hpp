#pragma once

#include <cstdint>
#include <random>

#include "glq/matrix.hpp"

namespace glq {

// Deterministic random source. mt19937_64 output is pinned by the standard
// and the uniform draws below avoid std distributions, so a seed reproduces
// the same values on every platform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform integer in [0, n), n >= 1, by rejection.
    int below(int n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % static_cast<uint64_t>(n);
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return static_cast<int>(x % static_cast<uint64_t>(n));
    }

    int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive

    Scalar scalar(const FieldSpec& f) { return f.element(static_cast<uint16_t>(below(f.q()))); }
    Scalar nonzero_scalar(const FieldSpec& f) {
        return f.element(static_cast<uint16_t>(1 + below(f.q() - 1)));
    }

    Mat matrix(const FieldSpec& f, int rows, int cols) {
        Mat m(f, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.setval(i, j, static_cast<uint16_t>(below(f.q())));
        return m;
    }

    Mat invertible(const FieldSpec& f, int n) {
        while (true) {
            Mat m = matrix(f, n, n);
            if (rank(m) == n) return m;
        }
    }

    // Independent stream seed derived from a root seed (splitmix64 step).
    static uint64_t derive(uint64_t root, uint64_t stream) {
        uint64_t z = root + 0x9E3779B97F4A7C15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace glq
