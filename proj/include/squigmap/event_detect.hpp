#ifndef SQUIGMAP_EVENT_DETECT_HPP
#define SQUIGMAP_EVENT_DETECT_HPP

#include <cstddef>
#include <vector>

#include "squigmap/fixed_point.hpp"
#include "squigmap/types.hpp"

namespace squig {

// Two-window t-statistic segmentation parameters (R9.4 defaults).
struct EventDetectionParams {
    size_t window1 = 3;
    size_t window2 = 6;
    double threshold1 = 1.4;
    double threshold2 = 9.0;
    double peak_height = 0.2;
    size_t prefix_trim = 50;   // adaptor events discarded
    size_t query_events = 250; // events retained per query

    bool valid() const {
        return window1 > 0 && window1 < window2 && threshold1 > 0 &&
               threshold2 > 0 && query_events >= 1;
    }
};

struct Event {
    size_t start = 0;  // sample index
    size_t length = 0; // sample count
    double mean = 0.0; // pA
    double stdv = 0.0;
};

// (raw + offset) * range / digitisation
std::vector<double> dac_to_pa(const RawRead& read);

// Ordered, non-overlapping events tiling the whole signal. Boundaries at
// peaks of the two-window Welch t-statistic.
std::vector<Event> detect_events(const std::vector<double>& pa,
                                 const EventDetectionParams& params);

// Drop prefix_trim adaptor events, take the next query_events means,
// z-score and quantize.
EventQuery extract_query(const std::vector<Event>& events,
                         const EventDetectionParams& params,
                         const FixedPointParams& fp);

} // namespace squig

#endif
