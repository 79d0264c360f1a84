#include "squigmap/fixed_point.hpp"

#include <cmath>
#include <limits>

namespace squig {

int16_t quantize(double value, const FixedPointParams& params) {
    double scaled = value * static_cast<double>(params.scale_factor);
    // round half away from zero
    double rounded = scaled >= 0.0 ? std::floor(scaled + 0.5) : std::ceil(scaled - 0.5);
    double lo = static_cast<double>(std::numeric_limits<int16_t>::min());
    double hi = static_cast<double>(std::numeric_limits<int16_t>::max());
    if (rounded < lo) rounded = lo;
    if (rounded > hi) rounded = hi;
    return static_cast<int16_t>(rounded);
}

std::vector<int16_t> quantize(const std::vector<double>& values,
                              const FixedPointParams& params) {
    std::vector<int16_t> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(quantize(v, params));
    return out;
}

void mean_std(const std::vector<double>& samples, double& mean, double& std) {
    double sum = 0.0;
    for (double s : samples) sum += s;
    mean = sum / static_cast<double>(samples.size());
    double ss = 0.0;
    for (double s : samples) {
        double d = s - mean;
        ss += d * d;
    }
    std = std::sqrt(ss / static_cast<double>(samples.size()));
}

std::vector<double> zscore_normalize(const std::vector<double>& samples) {
    if (samples.size() < 2) throw SignalTooShort("zscore: need at least 2 samples");
    double mu, sigma;
    mean_std(samples, mu, sigma);
    if (sigma == 0.0) throw ZeroVariance("zscore: zero variance input");
    std::vector<double> out;
    out.reserve(samples.size());
    for (double s : samples) out.push_back((s - mu) / sigma);
    return out;
}

} // namespace squig
