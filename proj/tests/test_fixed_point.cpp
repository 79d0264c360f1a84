#include <doctest.h>

#include <cmath>
#include <random>

#include "squigmap/fixed_point.hpp"

using namespace squig;

TEST_CASE("quantize basics") {
    FixedPointParams fp;
    CHECK(quantize(0.0, fp) == 0);
    CHECK(quantize(1.0, fp) == 32);
    // -1.234 * 32 = -39.488, half-away-from-zero -> -39
    CHECK(quantize(-1.234, fp) == -39);
}

TEST_CASE("quantize rounds half away from zero") {
    FixedPointParams fp;
    fp.scale_factor = 2;
    CHECK(quantize(0.25, fp) == 1);   // 0.5 -> 1
    CHECK(quantize(-0.25, fp) == -1); // -0.5 -> -1
    CHECK(quantize(0.75, fp) == 2);   // 1.5 -> 2
    CHECK(quantize(-0.75, fp) == -2);
}

TEST_CASE("quantize clamps to the sample range") {
    FixedPointParams fp;
    fp.scale_factor = 1 << 14;
    CHECK(quantize(10.0, fp) == INT16_MAX);
    CHECK(quantize(-10.0, fp) == INT16_MIN);
}

TEST_CASE("quantize is monotone non-decreasing") {
    FixedPointParams fp;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> val(-5.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        double a = val(rng), b = val(rng);
        if (a > b) std::swap(a, b);
        CHECK(quantize(a, fp) <= quantize(b, fp));
    }
}

TEST_CASE("quantize error bound without clamping") {
    FixedPointParams fp;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> val(-4.0, 4.0);
    double sf = fp.scale_factor;
    for (int i = 0; i < 2000; ++i) {
        double v = val(rng);
        double err = std::fabs(static_cast<double>(quantize(v, fp)) / sf - v);
        CHECK(err <= 0.5 / sf + 1e-12);
    }
}

TEST_CASE("params validity") {
    FixedPointParams fp;
    CHECK(fp.valid());
    fp.scale_factor = 3;
    CHECK_FALSE(fp.valid());
    fp.scale_factor = 1;
    CHECK_FALSE(fp.valid());
    fp.scale_factor = 1 << 14;
    CHECK(fp.valid());
    fp.scale_factor = 1 << 15;
    CHECK_FALSE(fp.valid());
}

TEST_CASE("zscore of 1,2,3") {
    auto z = zscore_normalize({1.0, 2.0, 3.0});
    double s = std::sqrt(2.0 / 3.0); // population std
    CHECK(z[0] == doctest::Approx(-1.0 / s));
    CHECK(z[1] == doctest::Approx(0.0));
    CHECK(z[2] == doctest::Approx(1.0 / s));
    CHECK(z[2] == doctest::Approx(1.22474487));
}

TEST_CASE("zscore rejects flat input") {
    CHECK_THROWS_AS(zscore_normalize({5.0, 5.0, 5.0}), ZeroVariance);
}

TEST_CASE("zscore normalizes mean and std on random input") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> val(80.0, 12.0);
    std::vector<double> samples(1000);
    for (double& s : samples) s = val(rng);
    auto z = zscore_normalize(samples);
    double mu, sigma;
    mean_std(z, mu, sigma);
    CHECK(std::fabs(mu) < 1e-9);
    CHECK(std::fabs(sigma - 1.0) < 1e-9);
}

TEST_CASE("zscore is idempotent") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> val(50.0, 120.0);
    std::vector<double> samples(257);
    for (double& s : samples) s = val(rng);
    auto once = zscore_normalize(samples);
    auto twice = zscore_normalize(once);
    for (size_t i = 0; i < once.size(); ++i)
        CHECK(std::fabs(once[i] - twice[i]) < 1e-9);
}

TEST_CASE("INF sentinel leaves headroom for one addition") {
    // largest single-step distance of 16-bit samples
    int64_t max_delta = int64_t{INT16_MAX} - INT16_MIN;
    CHECK(int64_t{INF_FIXED} + max_delta <= INT32_MAX);
}
