#ifndef SQUIGMAP_TYPES_HPP
#define SQUIGMAP_TYPES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "squigmap/fixed_point.hpp"

namespace squig {

// One raw-signal record as stored in an (ASCII) SLOW5 file.
struct RawRead {
    std::string read_id;
    std::vector<int16_t> raw;   // DAC units
    double digitisation = 0.0;
    double offset = 0.0;
    double range_pa = 0.0;
    double sampling_rate = 0.0; // Hz

    bool valid() const {
        return digitisation > 0.0 && sampling_rate > 0.0 && !raw.empty();
    }
};

// Fixed-length normalized + quantized event sequence extracted from a read.
struct EventQuery {
    std::string read_id;
    std::vector<double> events_normalized;
    std::vector<int16_t> events_fixed;
    size_t n_events = 0;
    size_t trimmed_prefix = 0;
    FixedPointParams fp; // quantization parameters the fixed samples were built with
};

enum class Strand : uint8_t { forward = 0, reverse = 1 };

enum class EngineKind : uint8_t { float_full, float_banded, fixed_banded, pe_sim };

const char* engine_name(EngineKind e);

struct SdtwResult {
    size_t position = 0;     // 0-based end index into the reference
    double score = 0.0;      // float engines: distance; fixed engines: raw accumulator
    Strand strand = Strand::forward;
    EngineKind engine = EngineKind::float_full;
    bool overflow_flag = false;
};

} // namespace squig

#endif
