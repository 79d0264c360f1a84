#ifndef SQUIGMAP_SIGNAL_INDEX_HPP
#define SQUIGMAP_SIGNAL_INDEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "squigmap/fixed_point.hpp"
#include "squigmap/pore_model.hpp"
#include "squigmap/types.hpp"

namespace squig {

// Normalized, quantized forward/reverse synthetic reference signals for one
// reference record. Each strand is z-scored independently over its own
// synthesized signal.
struct SignalIndex {
    std::string name;
    std::vector<int16_t> forward_fixed;
    std::vector<int16_t> reverse_fixed;
    // kept alongside for the float engines
    std::vector<double> forward_norm;
    std::vector<double> reverse_norm;
    double forward_mean = 0.0, forward_std = 0.0;
    double reverse_mean = 0.0, reverse_std = 0.0;
    FixedPointParams params;
    int k = 6;

    size_t n_samples() const { return forward_fixed.size(); }
    const std::vector<int16_t>& fixed(Strand s) const {
        return s == Strand::forward ? forward_fixed : reverse_fixed;
    }
    const std::vector<double>& norm(Strand s) const {
        return s == Strand::forward ? forward_norm : reverse_norm;
    }
};

SignalIndex build_index(const std::string& name, const std::string& bases,
                        const PoreModel& model, const FixedPointParams& params);

// Binary index file: magic "SQIX", version u16, record count, then per record
// params, k, name, normalization stats, and raw i16 sample arrays.
// A <path>.json sidecar carries the stats in readable form.
void write_index(const std::vector<SignalIndex>& records, const std::string& path);
std::vector<SignalIndex> read_index(const std::string& path);

} // namespace squig

#endif
