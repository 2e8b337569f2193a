#pragma once

#include "g2calib/vec7.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace g2calib {

/// Deterministic gaussian sampler: mt19937_64 plus explicit Box-Muller,
/// so reports are bit-reproducible across standard libraries.
class GaussianRng {
  public:
    explicit GaussianRng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01(), u2 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * M_PI * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    Vec7 vec7() {
        Vec7 v;
        for (int i = 0; i < 7; ++i) v[i] = gaussian();
        return v;
    }

    Vec7 unit_vec7() { return normalized(vec7()); }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0;
};

} // namespace g2calib
