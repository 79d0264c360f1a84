#include "squigmap/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "squigmap/errors.hpp"
#include "squigmap/fixed_point.hpp"

namespace squig {

PoreModel make_test_model(int k, uint64_t seed) {
    PoreModel model;
    model.k = k;
    size_t n = size_t{1} << (2 * k);
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    const char alphabet[4] = {'A', 'C', 'G', 'T'};
    // levels spread over a realistic pA range, shuffled so adjacent k-mers
    // are not adjacent in level
    for (size_t i = 0; i < n; ++i) {
        std::string kmer(static_cast<size_t>(k), 'A');
        size_t v = i;
        for (int p = k - 1; p >= 0; --p) {
            kmer[static_cast<size_t>(p)] = alphabet[v & 3];
            v >>= 2;
        }
        double level = 60.0 + 60.0 * static_cast<double>(order[i]) / static_cast<double>(n);
        model.level_mean[kmer] = level;
        model.level_stdv[kmer] = 1.5;
    }
    return model;
}

SimOutput simulate_reads(const std::string& bases, const PoreModel& model,
                         const SimReadsConfig& cfg) {
    if (cfg.noise_sigma < 0.0) throw Error("simulate_reads: negative noise_sigma");

    std::vector<double> fwd = synthesize_signal(bases, model);
    std::vector<double> rev = synthesize_signal(reverse_complement(bases), model);
    size_t n_samples = fwd.size();
    // headroom for duplications consuming fewer reference samples
    size_t needed = cfg.query_events + cfg.tail_events + 1;
    if (n_samples < needed)
        throw SequenceTooShort("simulate_reads: reference has " + std::to_string(n_samples) +
                               " signal samples, need at least " + std::to_string(needed));

    double model_mean, model_std;
    mean_std(fwd, model_mean, model_std);
    if (model_std == 0.0) throw ZeroVariance("simulate_reads: flat reference signal");
    double level_min = *std::min_element(fwd.begin(), fwd.end());
    double level_max = *std::max_element(fwd.begin(), fwd.end());

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> adaptor_level(level_min, level_max);
    std::normal_distribution<double> noise(0.0, cfg.noise_sigma * model_std);
    std::bernoulli_distribution strand_coin(0.5);
    std::uniform_int_distribution<size_t> event_len(cfg.samples_per_event - 2,
                                                    cfg.samples_per_event + 2);
    // duplication only makes sense with noise; identical adjacent levels
    // would merge back into one event during detection
    bool dup_enabled = cfg.event_dup_prob > 0.0 && cfg.noise_sigma > 0.0;
    std::bernoulli_distribution dup_coin(dup_enabled ? cfg.event_dup_prob : 0.0);

    double dac_scale = cfg.digitisation / cfg.range_pa;
    auto dac_of = [&](double level) {
        return std::clamp(std::lround(level * dac_scale - cfg.offset),
                          long{INT16_MIN}, long{INT16_MAX});
    };
    // A planted window is well-posed when (a) no two adjacent samples share
    // a DAC code — equal neighbors merge into one event, making the planted
    // event count unrecoverable — and (b) the end-position level stands
    // clear of its neighbors, so the self-normalized query has a unique
    // best end even with slightly mismatched normalization stats.
    double end_contrast = 0.7 * model_std;
    auto window_ok = [&](const std::vector<double>& ref, size_t start) {
        size_t last = start + cfg.query_events + cfg.tail_events;
        for (size_t i = start + 1; i <= last; ++i)
            if (dac_of(ref[i]) == dac_of(ref[i - 1])) return false;
        size_t end = start + cfg.query_events - 1;
        if (end >= 2) {
            if (std::fabs(ref[end] - ref[end - 1]) < end_contrast) return false;
            if (std::fabs(ref[end] - ref[end - 2]) < end_contrast) return false;
        }
        return true;
    };

    SimOutput out;
    for (size_t r = 0; r < cfg.n_reads; ++r) {
        Strand strand = strand_coin(rng) ? Strand::reverse : Strand::forward;
        const std::vector<double>& ref = strand == Strand::forward ? fwd : rev;

        std::uniform_int_distribution<size_t> start_dist(0, n_samples - needed);
        size_t start = start_dist(rng);
        for (int attempt = 0; attempt < 1000 && !window_ok(ref, start); ++attempt)
            start = start_dist(rng);

        std::vector<double> levels;
        levels.reserve(cfg.adaptor_events + cfg.query_events + cfg.tail_events);
        for (size_t i = 0; i < cfg.adaptor_events; ++i) {
            double next = ref[start]; // the sample the last adaptor event precedes
            double level = adaptor_level(rng);
            // redraw levels that would merge with a neighboring event
            for (int attempt = 0; attempt < 100; ++attempt) {
                long prev = i == 0 ? long{INT16_MIN} : dac_of(levels.back());
                long ahead = i + 1 == cfg.adaptor_events ? dac_of(next) : long{INT16_MIN};
                long d = dac_of(level);
                if (d != prev && d != ahead) break;
                level = adaptor_level(rng);
            }
            levels.push_back(level);
        }

        size_t pos = start;
        size_t end_position = start;
        size_t emitted = 0;
        while (emitted < cfg.query_events + cfg.tail_events) {
            double level = ref[pos] + (cfg.noise_sigma > 0.0 ? noise(rng) : 0.0);
            levels.push_back(level);
            ++emitted;
            if (emitted == cfg.query_events) end_position = pos;
            if (!(dup_enabled && dup_coin(rng))) {
                ++pos;
                if (pos >= n_samples) break;
            }
        }

        RawRead read;
        read.read_id = "sim_" + std::to_string(r);
        read.digitisation = cfg.digitisation;
        read.range_pa = cfg.range_pa;
        read.offset = cfg.offset;
        read.sampling_rate = cfg.sampling_rate;
        for (double level : levels) {
            long dac = dac_of(level);
            size_t len = event_len(rng);
            for (size_t s = 0; s < len; ++s)
                read.raw.push_back(static_cast<int16_t>(dac));
        }
        out.reads.push_back(std::move(read));
        out.truth.push_back({out.reads.back().read_id, strand, end_position});
    }
    return out;
}

} // namespace squig
