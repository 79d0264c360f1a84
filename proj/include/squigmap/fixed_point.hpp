#ifndef SQUIGMAP_FIXED_POINT_HPP
#define SQUIGMAP_FIXED_POINT_HPP

#include <cstdint>
#include <vector>

#include "squigmap/errors.hpp"

namespace squig {

enum class OverflowMode : uint8_t { wrap = 0, saturate = 1 };

// Cost accumulator infinity. Kept well below INT32_MAX so that one
// distance addition on top of the sentinel cannot wrap.
inline constexpr int32_t INF_FIXED = int32_t{1} << 30;

struct FixedPointParams {
    int32_t scale_factor = 32;      // power of two, 2..2^14
    int sample_bits = 16;
    int accum_bits = 32;
    OverflowMode overflow_mode = OverflowMode::wrap;

    bool valid() const {
        if (scale_factor < 2 || scale_factor > (1 << 14)) return false;
        if (scale_factor & (scale_factor - 1)) return false;
        return sample_bits == 16 && accum_bits == 32;
    }
};

// round-half-away-from-zero(value * scale_factor), clamped to i16 range
int16_t quantize(double value, const FixedPointParams& params);

std::vector<int16_t> quantize(const std::vector<double>& values,
                              const FixedPointParams& params);

// Population-std z-score normalization. Throws ZeroVariance on flat input.
std::vector<double> zscore_normalize(const std::vector<double>& samples);

// Population mean and standard deviation of samples.
void mean_std(const std::vector<double>& samples, double& mean, double& std);

} // namespace squig

#endif
