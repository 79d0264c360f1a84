#ifndef SQUIGMAP_SIMULATE_HPP
#define SQUIGMAP_SIMULATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "squigmap/pore_model.hpp"
#include "squigmap/types.hpp"

namespace squig {

// Synthetic read generator: plants event-level signal segments cut from the
// synthesized reference, with an adaptor prefix, per-event Gaussian noise,
// optional event duplication, and expansion to raw DAC samples.
struct SimReadsConfig {
    size_t n_reads = 100;
    uint64_t seed = 42;
    double noise_sigma = 0.0;    // in units of the model's level spread
    double event_dup_prob = 0.0; // per-event duplication probability (needs noise > 0)
    size_t adaptor_events = 50;
    size_t query_events = 250;
    size_t tail_events = 5;
    size_t samples_per_event = 10;
    double digitisation = 8192.0;
    // high DAC resolution (~0.012 pA/count) so that distinct model levels
    // stay distinct after digitization; a coarser range merges neighboring
    // event levels and breaks exact planted-read recovery
    double range_pa = 100.0;
    double offset = 0.0;
    double sampling_rate = 4000.0;
};

struct SimTruth {
    std::string read_id;
    Strand strand = Strand::forward;
    size_t end_position = 0; // 0-based end index in the strand's signal
};

struct SimOutput {
    std::vector<RawRead> reads;
    std::vector<SimTruth> truth;
};

SimOutput simulate_reads(const std::string& bases, const PoreModel& model,
                         const SimReadsConfig& config);

// Deterministic synthetic pore model with well-separated levels; stands in
// for a flowcell model file in tests and examples.
PoreModel make_test_model(int k, uint64_t seed);

} // namespace squig

#endif
