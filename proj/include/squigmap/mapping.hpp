#ifndef SQUIGMAP_MAPPING_HPP
#define SQUIGMAP_MAPPING_HPP

#include <optional>
#include <string>
#include <vector>

#include "squigmap/pe_chain.hpp"
#include "squigmap/signal_index.hpp"
#include "squigmap/types.hpp"

namespace squig {

enum class Decision : uint8_t { accept, reject, unmapped };

const char* decision_name(Decision d);

struct MappingRecord {
    std::string read_id;
    std::string ref_name;
    Strand strand = Strand::forward;
    size_t position = 0;       // end index, signal coordinates
    size_t position_bases = 0; // position + k - 1, base coordinates
    double score = 0.0;
    double second_best_score = 0.0;
    int mapq = 0;
    Decision decision = Decision::unmapped;
    bool overflow_flag = false;
    EngineKind engine = EngineKind::float_banded;
};

struct TargetRegion {
    std::string ref_name; // empty matches any record
    size_t start = 0;     // base interval [start, end)
    size_t end = 0;
};

struct SelectionPolicy {
    enum class Mode { target_enrichment, target_depletion };
    Mode mode = Mode::target_enrichment;
    std::vector<TargetRegion> target_regions;
    int mapq_threshold = 20;
};

// clamp(round(60 * (second - best) / second), 0, 60)
int compute_mapq(double best, double second);

// Three-way decision: below the MAPQ threshold the read stays unmapped;
// otherwise enrichment accepts on-target reads and depletion rejects them.
// Overflowed fixed-engine results are always unmapped.
Decision decide(const MappingRecord& record, const SelectionPolicy& policy);

// Align the query against both strands of one reference record; the lower
// score wins, the losing strand provides the second-best score.
MappingRecord map_read(const EventQuery& query, const SignalIndex& index,
                       EngineKind engine,
                       const PeChainConfig* pe_config = nullptr);

// Multi-record variant: best candidate across all records and strands;
// second best is the runner-up over the remaining candidates.
MappingRecord map_read_multi(const EventQuery& query,
                             const std::vector<SignalIndex>& records,
                             EngineKind engine,
                             const PeChainConfig* pe_config = nullptr);

} // namespace squig

#endif
