#ifndef SQUIGMAP_SDTW_HPP
#define SQUIGMAP_SDTW_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "squigmap/fixed_point.hpp"
#include "squigmap/types.hpp"

namespace squig {

// Full cost matrix, oracle engine only. cell(i, j) uses 1-based sequence
// indices; row 0 and column 0 hold the boundary values.
struct CostMatrix {
    size_t rows = 0; // M
    size_t cols = 0; // N
    std::vector<double> cells; // (M+1) x (N+1)

    double& at(size_t i, size_t j) { return cells[i * (cols + 1) + j]; }
    double at(size_t i, size_t j) const { return cells[i * (cols + 1) + j]; }
};

// Optimal warp path from backtracking, 0-based (query, reference) pairs in
// alignment order.
struct WarpPath {
    std::vector<std::pair<size_t, size_t>> pairs;
    size_t start_position = 0; // 0-based reference start
};

// Full-matrix subsequence DTW with Manhattan distance. Free start along the
// reference; score is the minimum of the last query row, position its
// 0-based column (first minimum on ties).
SdtwResult sdtw_full(const std::vector<double>& query,
                     const std::vector<double>& reference,
                     CostMatrix* matrix = nullptr,
                     WarpPath* path = nullptr);

// Same (position, score) as sdtw_full with O(M) auxiliary memory.
SdtwResult sdtw_banded_float(const std::vector<double>& query,
                             const std::vector<double>& reference);

// Hardware-faithful integer variant: 16-bit samples, 32-bit accumulation
// with wrap (or saturate) semantics. overflow_flag reports any accumulator
// addition that left the 32-bit range.
SdtwResult sdtw_banded_fixed(const std::vector<int16_t>& query,
                             const std::vector<int16_t>& reference,
                             const FixedPointParams& params);

// 32-bit accumulator addition shared with the PE-chain simulator.
inline int32_t accum_add(int32_t a, int32_t b, OverflowMode mode, bool& overflowed) {
    int64_t s = static_cast<int64_t>(a) + static_cast<int64_t>(b);
    if (s > INT32_MAX || s < INT32_MIN) {
        overflowed = true;
        if (mode == OverflowMode::saturate)
            return s > INT32_MAX ? INT32_MAX : INT32_MIN;
        return static_cast<int32_t>(static_cast<uint64_t>(s)); // two's-complement wrap
    }
    return static_cast<int32_t>(s);
}

} // namespace squig

#endif
