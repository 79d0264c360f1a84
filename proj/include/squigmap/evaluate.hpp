#ifndef SQUIGMAP_EVALUATE_HPP
#define SQUIGMAP_EVALUATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "squigmap/simulate.hpp"

namespace squig {

// Fixed-engine position agreement against float-engine truth, per scaling
// factor, on seeded synthetic reads.
struct ScalingEvalConfig {
    std::vector<int32_t> sf_list = {2, 8, 32, 128};
    size_t n_reads = 1000;
    uint64_t seed = 42;
    double noise_sigma = 0.2;
    size_t tolerance_samples = 5;
    OverflowMode overflow_mode = OverflowMode::wrap;
};

struct ScalingPoint {
    int32_t scale_factor = 0;
    size_t n_reads = 0;   // reads that survived the pipeline
    size_t n_agree = 0;   // strand match and |position delta| <= tolerance
    double agreement_pct = 0.0;
};

std::vector<ScalingPoint> eval_scaling(const std::string& bases, const PoreModel& model,
                                       const ScalingEvalConfig& config);

} // namespace squig

#endif
