#ifndef SQUIGMAP_BATCH_HPP
#define SQUIGMAP_BATCH_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "squigmap/event_detect.hpp"
#include "squigmap/mapping.hpp"
#include "squigmap/signal_index.hpp"

namespace squig {

struct MapRunConfig {
    EngineKind engine = EngineKind::float_banded;
    EventDetectionParams event_params;
    SelectionPolicy policy;
    size_t threads = 1;
    size_t batch_size = 512;
};

struct MapRunStats {
    size_t n_reads = 0;
    size_t n_accept = 0;
    size_t n_reject = 0;
    size_t n_unmapped = 0;
    size_t n_errors = 0; // skipped reads (too short, flat, ...)
    double sec_preprocess = 0.0;
    double sec_sdtw = 0.0;
    double sec_other = 0.0;
    double sec_wall = 0.0;
};

// Batch scheduler: reads SLOW5 records batch by batch, fans each batch out
// to worker threads (pre-processing + alignment per read), writes mappings
// in input order. Output is independent of threads and batch_size.
MapRunStats run_map(std::istream& slow5, const std::vector<SignalIndex>& index,
                    const MapRunConfig& config, std::ostream& out);

void print_summary(std::ostream& out, const MapRunStats& stats);

} // namespace squig

#endif
