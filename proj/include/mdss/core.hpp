#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdss {

// ---------------------------------------------------------------------------
// Error taxonomy. The CLI maps these onto exit codes:
//   ConfigError -> 2, DataError -> 3, NumericError -> 4.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

// Specific data failures named by the pipeline contracts.
struct DegenerateCloud : DataError {
    using DataError::DataError;
};

struct TooFewPoints : DataError {
    using DataError::DataError;
};

struct DegenerateCalibration : NumericError {
    using NumericError::NumericError;
};

// ---------------------------------------------------------------------------
// Dense row-major H x W grid.
// ---------------------------------------------------------------------------

template <typename T>
struct Grid2D {
    int h = 0;
    int w = 0;
    std::vector<T> v;

    Grid2D() = default;
    Grid2D(int height, int width, T fill = T{})
        : h(height), w(width), v(static_cast<std::size_t>(height) * width, fill) {}

    T& at(int y, int x) { return v[static_cast<std::size_t>(y) * w + x]; }
    const T& at(int y, int x) const { return v[static_cast<std::size_t>(y) * w + x]; }

    std::size_t size() const { return v.size(); }
    bool same_shape(const Grid2D& o) const { return h == o.h && w == o.w; }
};

using ScoreMap = Grid2D<double>;
using MaskGrid = Grid2D<std::uint8_t>;

inline double map_max(const ScoreMap& m) {
    double best = 0.0;
    for (double x : m.v) best = std::max(best, x);
    return best;
}

// ---------------------------------------------------------------------------
// Seeded RNG. All stochastic stages derive their stream from a master seed
// plus a purpose tag so results do not depend on evaluation order.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, const std::string& tag, std::uint64_t index = 0) {
    return splitmix64(master ^ splitmix64(fnv1a64(tag)) ^ splitmix64(index * 0x9e3779b97f4a7c15ULL + 1));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform integer in [0, n).
    std::size_t index(std::size_t n) {
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        return d(eng_);
    }

    double uniform(double lo = 0.0, double hi = 1.0) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(eng_);
    }

    double normal(double mu = 0.0, double sigma = 1.0) {
        std::normal_distribution<double> d(mu, sigma);
        return d(eng_);
    }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

inline double sqr(double x) { return x * x; }

}  // namespace mdss
