#ifndef SQUIGMAP_PE_CHAIN_HPP
#define SQUIGMAP_PE_CHAIN_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "squigmap/fixed_point.hpp"
#include "squigmap/types.hpp"

namespace squig {

struct PeChainConfig {
    size_t chain_length = 250;
    OverflowMode overflow_mode = OverflowMode::wrap;
};

// One per-cycle trace record.
struct PeTraceRow {
    uint64_t cycle = 0;
    size_t active_pes = 0;
    int32_t best_score = std::numeric_limits<int32_t>::max();
    size_t best_position = 0;
};

// Cycle-stepped model of the systolic PE chain. Each cycle the chain
// computes one anti-diagonal of the cost matrix: PE i handles cell
// (i, t - i + 1). L1 holds every PE's previous-cycle cost, L2 the cost
// before that, providing the up / diagonal / left neighbors.
class PeChainSim {
public:
    PeChainSim(std::vector<int16_t> query, std::vector<int16_t> reference,
               PeChainConfig config = {});

    uint64_t cycle() const { return cycle_; }
    uint64_t total_cycles() const { return total_cycles_; }
    bool finished() const { return cycle_ >= total_cycles_; }
    size_t active_pes() const;

    void step();
    SdtwResult run_to_completion(std::vector<PeTraceRow>* trace = nullptr);

    int32_t best_score() const { return best_score_; }
    size_t best_position() const { return best_position_; }
    bool overflowed() const { return overflow_; }

private:
    std::vector<int16_t> query_;
    std::vector<int16_t> ref_;
    PeChainConfig config_;
    std::vector<int32_t> l1_, l2_;
    uint64_t cycle_ = 0;
    uint64_t total_cycles_ = 0;
    int32_t best_score_ = std::numeric_limits<int32_t>::max();
    size_t best_position_ = 0;
    bool overflow_ = false;
};

// cycles / clock_hz, plus an optional fixed per-query transfer latency
double estimate_latency(uint64_t cycles, double clock_hz, double setup_seconds = 0.0);

} // namespace squig

#endif
