#include "squigmap/pe_chain.hpp"

#include <algorithm>
#include <cstdlib>

#include "squigmap/errors.hpp"
#include "squigmap/sdtw.hpp"

namespace squig {

PeChainSim::PeChainSim(std::vector<int16_t> query, std::vector<int16_t> reference,
                       PeChainConfig config)
    : query_(std::move(query)), ref_(std::move(reference)), config_(config) {
    if (query_.empty()) throw EmptyInput("pe_chain: empty query");
    if (ref_.empty()) throw EmptyReference("pe_chain: empty reference");
    if (query_.size() > config_.chain_length)
        throw QueryTooLong("pe_chain: query of " + std::to_string(query_.size()) +
                           " events exceeds chain length " +
                           std::to_string(config_.chain_length));
    // padded PEs beyond the query never activate; the cycle count still
    // covers the full chain, as in fixed hardware
    l1_.assign(query_.size() + 1, INF_FIXED);
    l2_.assign(query_.size() + 1, INF_FIXED);
    total_cycles_ = static_cast<uint64_t>(ref_.size()) + config_.chain_length - 1;
}

size_t PeChainSim::active_pes() const {
    // PE i (1-based) is active at cycle t iff i <= t <= N + i - 1
    uint64_t t = cycle_;
    if (t == 0 || t > total_cycles_) return 0;
    size_t m = query_.size();
    uint64_t n = ref_.size();
    uint64_t lo = t > n ? t - n + 1 : 1;
    uint64_t hi = std::min<uint64_t>(m, t);
    return hi >= lo ? static_cast<size_t>(hi - lo + 1) : 0;
}

void PeChainSim::step() {
    if (finished()) throw SimulationFinished("pe_chain: simulation already complete");
    uint64_t t = ++cycle_;
    size_t m = query_.size();
    uint64_t n = ref_.size();
    uint64_t lo = t > n ? t - n + 1 : 1;
    uint64_t hi = std::min<uint64_t>(m, t);

    // Evaluate top-down so each PE reads its neighbors' previous-cycle
    // values before they are overwritten by this cycle's shift.
    for (uint64_t i = hi; i >= lo && i >= 1; --i) {
        uint64_t j = t - i + 1; // reference sample seen by PE i this cycle
        int32_t delta = std::abs(static_cast<int32_t>(query_[i - 1]) -
                                 static_cast<int32_t>(ref_[j - 1]));
        int32_t up = i == 1 ? 0 : l1_[i - 1];
        int32_t diag = i == 1 ? 0 : l2_[i - 1];
        int32_t left = l1_[i];
        int32_t cost = accum_add(delta, std::min(up, std::min(diag, left)),
                                 config_.overflow_mode, overflow_);
        l2_[i] = l1_[i];
        l1_[i] = cost;
        if (i == m && cost < best_score_) {
            best_score_ = cost;
            best_position_ = static_cast<size_t>(j - 1);
        }
        if (i == 1) break;
    }
}

SdtwResult PeChainSim::run_to_completion(std::vector<PeTraceRow>* trace) {
    if (trace) trace->clear();
    while (!finished()) {
        step();
        if (trace)
            trace->push_back({cycle_, active_pes(), best_score_, best_position_});
    }
    SdtwResult res;
    res.engine = EngineKind::pe_sim;
    res.score = static_cast<double>(best_score_);
    res.position = best_position_;
    res.overflow_flag = overflow_;
    return res;
}

double estimate_latency(uint64_t cycles, double clock_hz, double setup_seconds) {
    if (clock_hz <= 0.0) throw Error("estimate_latency: clock_hz must be positive");
    return static_cast<double>(cycles) / clock_hz + setup_seconds;
}

} // namespace squig
