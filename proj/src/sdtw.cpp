#include "squigmap/sdtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "squigmap/errors.hpp"

namespace squig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_sizes(size_t m, size_t n) {
    if (m == 0 || n == 0) throw EmptyInput("sdtw: empty query or reference");
    if (m > n)
        throw QueryLongerThanReference("sdtw: query length " + std::to_string(m) +
                                       " exceeds reference length " + std::to_string(n));
}

} // namespace

SdtwResult sdtw_full(const std::vector<double>& query,
                     const std::vector<double>& reference,
                     CostMatrix* matrix, WarpPath* path) {
    size_t m = query.size(), n = reference.size();
    check_sizes(m, n);

    CostMatrix local;
    CostMatrix& c = matrix ? *matrix : local;
    c.rows = m;
    c.cols = n;
    c.cells.assign((m + 1) * (n + 1), 0.0);
    // boundaries: free start along the reference, walled-off first column
    c.at(0, 0) = 0.0;
    for (size_t j = 1; j <= n; ++j) c.at(0, j) = 0.0;
    for (size_t i = 1; i <= m; ++i) c.at(i, 0) = kInf;

    for (size_t i = 1; i <= m; ++i) {
        for (size_t j = 1; j <= n; ++j) {
            double delta = std::fabs(query[i - 1] - reference[j - 1]);
            double up = c.at(i - 1, j);
            double diag = c.at(i - 1, j - 1);
            double left = c.at(i, j - 1);
            c.at(i, j) = delta + std::min(up, std::min(diag, left));
        }
    }

    SdtwResult res;
    res.engine = EngineKind::float_full;
    double best = kInf;
    size_t best_j = 0;
    for (size_t j = 1; j <= n; ++j) {
        if (c.at(m, j) < best) {
            best = c.at(m, j);
            best_j = j;
        }
    }
    res.score = best;
    res.position = best_j - 1;

    if (path) {
        path->pairs.clear();
        size_t i = m, j = best_j;
        while (true) {
            path->pairs.emplace_back(i - 1, j - 1);
            if (i == 1) break;
            double up = c.at(i - 1, j);
            double diag = c.at(i - 1, j - 1);
            double left = c.at(i, j - 1);
            double best_pred = std::min(up, std::min(diag, left));
            if (diag == best_pred) {
                --i; --j;
            } else if (up == best_pred) {
                --i;
            } else {
                --j;
            }
        }
        path->start_position = j - 1;
        std::reverse(path->pairs.begin(), path->pairs.end());
    }
    return res;
}

SdtwResult sdtw_banded_float(const std::vector<double>& query,
                             const std::vector<double>& reference) {
    size_t m = query.size(), n = reference.size();
    check_sizes(m, n);

    // cur/prev hold the current and previous reference column, rows 1..M
    std::vector<double> prev(m + 1, kInf), cur(m + 1, kInf);
    double best = kInf;
    size_t best_j = 1;
    for (size_t j = 1; j <= n; ++j) {
        double y = reference[j - 1];
        for (size_t i = 1; i <= m; ++i) {
            double delta = std::fabs(query[i - 1] - y);
            double up = i == 1 ? 0.0 : cur[i - 1];
            double diag = i == 1 ? 0.0 : prev[i - 1];
            double left = prev[i];
            cur[i] = delta + std::min(up, std::min(diag, left));
        }
        if (cur[m] < best) {
            best = cur[m];
            best_j = j;
        }
        std::swap(prev, cur);
    }

    SdtwResult res;
    res.engine = EngineKind::float_banded;
    res.score = best;
    res.position = best_j - 1;
    return res;
}

SdtwResult sdtw_banded_fixed(const std::vector<int16_t>& query,
                             const std::vector<int16_t>& reference,
                             const FixedPointParams& params) {
    size_t m = query.size(), n = reference.size();
    check_sizes(m, n);

    std::vector<int32_t> prev(m + 1, INF_FIXED), cur(m + 1, INF_FIXED);
    bool overflowed = false;
    int32_t best = std::numeric_limits<int32_t>::max();
    size_t best_j = 1;
    for (size_t j = 1; j <= n; ++j) {
        int32_t y = reference[j - 1];
        for (size_t i = 1; i <= m; ++i) {
            int32_t delta = std::abs(static_cast<int32_t>(query[i - 1]) - y);
            int32_t up = i == 1 ? 0 : cur[i - 1];
            int32_t diag = i == 1 ? 0 : prev[i - 1];
            int32_t left = prev[i];
            cur[i] = accum_add(delta, std::min(up, std::min(diag, left)),
                               params.overflow_mode, overflowed);
        }
        if (cur[m] < best) {
            best = cur[m];
            best_j = j;
        }
        std::swap(prev, cur);
    }

    SdtwResult res;
    res.engine = EngineKind::fixed_banded;
    res.score = static_cast<double>(best);
    res.position = best_j - 1;
    res.overflow_flag = overflowed;
    return res;
}

const char* engine_name(EngineKind e) {
    switch (e) {
        case EngineKind::float_full: return "float-full";
        case EngineKind::float_banded: return "float-banded";
        case EngineKind::fixed_banded: return "fixed";
        case EngineKind::pe_sim: return "pe-sim";
    }
    return "?";
}

} // namespace squig
