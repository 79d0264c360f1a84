#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "squigmap/sdtw.hpp"
#include "squigmap/errors.hpp"

using namespace squig;

namespace {

// Exhaustive warp-path enumeration: all monotone paths starting anywhere in
// the first query row and ending anywhere in the last. Independent of the
// DP recurrence.
struct BruteResult {
    double score = std::numeric_limits<double>::infinity();
    size_t position = 0;
};

void walk(const std::vector<double>& q, const std::vector<double>& r,
          size_t i, size_t j, double cost, std::vector<double>& best_end) {
    cost += std::fabs(q[i] - r[j]);
    if (i == q.size() - 1) {
        if (cost < best_end[j]) best_end[j] = cost;
        // a path may still extend sideways along the last row; those
        // extensions are covered by longer paths ending at later columns
    }
    if (i + 1 < q.size()) walk(q, r, i + 1, j, cost, best_end);          // insertion
    if (i + 1 < q.size() && j + 1 < r.size()) walk(q, r, i + 1, j + 1, cost, best_end);
    if (j + 1 < r.size()) walk(q, r, i, j + 1, cost, best_end);          // deletion
}

BruteResult brute_force_sdtw(const std::vector<double>& q, const std::vector<double>& r) {
    std::vector<double> best_end(r.size(), std::numeric_limits<double>::infinity());
    for (size_t s = 0; s < r.size(); ++s)
        walk(q, r, 0, s, 0.0, best_end);
    BruteResult res;
    for (size_t j = 0; j < r.size(); ++j) {
        if (best_end[j] < res.score) {
            res.score = best_end[j];
            res.position = j;
        }
    }
    return res;
}

} // namespace

TEST_CASE("exact subsequence scores zero") {
    SdtwResult r = sdtw_full({1, 2, 3}, {9, 9, 1, 2, 3, 9});
    CHECK(r.score == 0.0);
    CHECK(r.position == 4);
}

TEST_CASE("single-sample query finds the nearest reference sample") {
    SdtwResult r = sdtw_full({5}, {1, 2, 3});
    CHECK(r.score == 2.0);
    CHECK(r.position == 2);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(sdtw_full({}, {1.0}), EmptyInput);
    CHECK_THROWS_AS(sdtw_full({1.0}, {}), EmptyInput);
    CHECK_THROWS_AS(sdtw_full({1, 2, 3}, {1, 2}), QueryLongerThanReference);
}

TEST_CASE("full engine equals brute-force path enumeration") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> m_dist(1, 5), n_extra(0, 6), val(-4, 4);
    for (int it = 0; it < 1000; ++it) {
        size_t m = static_cast<size_t>(m_dist(rng));
        size_t n = m + static_cast<size_t>(n_extra(rng));
        if (n > 7) n = 7;
        std::vector<double> q(m), r(n);
        for (double& x : q) x = val(rng);
        for (double& x : r) x = val(rng);
        BruteResult expect = brute_force_sdtw(q, r);
        SdtwResult got = sdtw_full(q, r);
        CHECK(got.score == expect.score);
        CHECK(got.position == expect.position);
    }
}

TEST_CASE("banded float equals full on random instances, exactly") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> m_dist(1, 40), n_dist(40, 300);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    for (int it = 0; it < 300; ++it) {
        size_t m = static_cast<size_t>(m_dist(rng));
        size_t n = static_cast<size_t>(n_dist(rng));
        std::vector<double> q(m), r(n);
        for (double& x : q) x = val(rng);
        for (double& x : r) x = val(rng);
        SdtwResult full = sdtw_full(q, r);
        SdtwResult banded = sdtw_banded_float(q, r);
        CHECK(banded.score == full.score);
        CHECK(banded.position == full.position);
    }
}

TEST_CASE("query equal to reference matches its end") {
    std::vector<double> x{0.5, -1.0, 2.0, 0.25, 1.0};
    SdtwResult r = sdtw_banded_float(x, x);
    CHECK(r.score == 0.0);
    CHECK(r.position == 4);
}

TEST_CASE("single-row query reduces to a running minimum") {
    std::vector<double> ref{4.0, 1.5, 3.0, 0.25, 9.0};
    SdtwResult r = sdtw_banded_float({1.0}, ref);
    CHECK(r.score == 0.5);
    CHECK(r.position == 1);
}

TEST_CASE("ties keep the first (smallest) position") {
    SdtwResult r = sdtw_full({1.0}, {3.0, 1.0, 5.0, 1.0});
    CHECK(r.score == 0.0);
    CHECK(r.position == 1);
}

TEST_CASE("backtracked warp path is monotone and matches the score") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    std::vector<double> q(8), r(30);
    for (double& x : q) x = val(rng);
    for (double& x : r) x = val(rng);
    WarpPath path;
    SdtwResult res = sdtw_full(q, r, nullptr, &path);
    REQUIRE_FALSE(path.pairs.empty());
    CHECK(path.pairs.front().first == 0);
    CHECK(path.pairs.front().second == path.start_position);
    CHECK(path.pairs.back().first == q.size() - 1);
    CHECK(path.pairs.back().second == res.position);
    double cost = 0.0;
    for (auto [i, j] : path.pairs) cost += std::fabs(q[i] - r[j]);
    CHECK(cost == doctest::Approx(res.score).epsilon(1e-12));
    for (size_t p = 1; p < path.pairs.size(); ++p) {
        auto [i0, j0] = path.pairs[p - 1];
        auto [i1, j1] = path.pairs[p];
        bool step_ok = (i1 == i0 + 1 && j1 == j0) || (i1 == i0 + 1 && j1 == j0 + 1) ||
                       (i1 == i0 && j1 == j0 + 1);
        CHECK(step_ok);
    }
}

TEST_CASE("pad-shift: off-scale prefix shifts the position exactly") {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    std::vector<double> q(10), r(60);
    for (double& x : q) x = val(rng);
    for (double& x : r) x = val(rng);
    SdtwResult base = sdtw_banded_float(q, r);
    const size_t pad = 17;
    std::vector<double> padded(pad, 1000.0); // farther from every query value
    padded.insert(padded.end(), r.begin(), r.end());
    SdtwResult shifted = sdtw_banded_float(q, padded);
    CHECK(shifted.score == base.score);
    CHECK(shifted.position == base.position + pad);
}

TEST_CASE("positive scaling scales the score and keeps the position") {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    std::vector<double> q(12), r(80);
    for (double& x : q) x = val(rng);
    for (double& x : r) x = val(rng);
    SdtwResult base = sdtw_banded_float(q, r);
    const double c = 2.0; // power of two keeps float arithmetic exact
    for (double& x : q) x *= c;
    for (double& x : r) x *= c;
    SdtwResult scaled = sdtw_banded_float(q, r);
    CHECK(scaled.position == base.position);
    CHECK(scaled.score == doctest::Approx(base.score * c).epsilon(1e-12));
}

TEST_CASE("fixed engine: quantized exact match scores zero") {
    std::vector<int16_t> q{10, -20, 30};
    std::vector<int16_t> r{99, 10, -20, 30, 5};
    FixedPointParams fp;
    SdtwResult res = sdtw_banded_fixed(q, r, fp);
    CHECK(res.score == 0.0);
    CHECK(res.position == 3);
    CHECK_FALSE(res.overflow_flag);
}

TEST_CASE("fixed engine stays within the quantization error bound") {
    std::mt19937_64 rng(36);
    std::normal_distribution<double> val(0.0, 1.0);
    FixedPointParams fp; // SF = 32
    const size_t m = 250, n = 2000;
    for (int it = 0; it < 5; ++it) {
        std::vector<double> q(m), r(n);
        for (double& x : q) x = val(rng);
        for (double& x : r) x = val(rng);
        std::vector<int16_t> qf = quantize(q, fp), rf = quantize(r, fp);
        SdtwResult fx = sdtw_banded_fixed(qf, rf, fp);
        SdtwResult fl = sdtw_banded_float(q, r);
        REQUIRE_FALSE(fx.overflow_flag);
        double bound = static_cast<double>(m + n - 1) / fp.scale_factor;
        CHECK(std::fabs(fx.score / fp.scale_factor - fl.score) <= bound);
        CHECK(fx.score >= 0.0);
    }
}

TEST_CASE("adversarial long query wraps the 32-bit accumulator") {
    // gamma(i, j) grows as i * 65535 down each column; it must pass
    // INT32_MAX once i exceeds 32768
    const size_t m = 33000;
    std::vector<int16_t> q(m, INT16_MAX);
    std::vector<int16_t> r(m, INT16_MIN);
    FixedPointParams fp;
    fp.scale_factor = 1 << 13;
    SdtwResult res = sdtw_banded_fixed(q, r, fp);
    CHECK(res.overflow_flag);
    CHECK(res.score < 0.0); // wrapped into negative territory

    FixedPointParams sat = fp;
    sat.overflow_mode = OverflowMode::saturate;
    SdtwResult res_sat = sdtw_banded_fixed(q, r, sat);
    CHECK(res_sat.overflow_flag);
    // saturation keeps costs ordered: no wrap below zero, and the cheapest
    // route runs along the INF start boundary, so the score lands between
    // the sentinel and the saturation ceiling
    CHECK(res_sat.score >= static_cast<double>(INF_FIXED));
    CHECK(res_sat.score <= static_cast<double>(INT32_MAX));
}

TEST_CASE("non-negative scores without overflow") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> val(-500, 500);
    for (int it = 0; it < 50; ++it) {
        std::vector<int16_t> q(20), r(60);
        for (int16_t& x : q) x = static_cast<int16_t>(val(rng));
        for (int16_t& x : r) x = static_cast<int16_t>(val(rng));
        FixedPointParams fp;
        SdtwResult res = sdtw_banded_fixed(q, r, fp);
        REQUIRE_FALSE(res.overflow_flag);
        CHECK(res.score >= 0.0);
    }
}
