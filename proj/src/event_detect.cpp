#include "squigmap/event_detect.hpp"

#include <cfloat>
#include <cmath>

#include "squigmap/errors.hpp"

namespace squig {

std::vector<double> dac_to_pa(const RawRead& read) {
    if (!read.valid()) throw Error("dac_to_pa: invalid read " + read.read_id);
    std::vector<double> pa;
    pa.reserve(read.raw.size());
    double scale = read.range_pa / read.digitisation;
    for (int16_t r : read.raw)
        pa.push_back((static_cast<double>(r) + read.offset) * scale);
    return pa;
}

namespace {

// Welch t-statistic between the w samples before and after each position.
std::vector<double> compute_tstat(const std::vector<double>& sum,
                                  const std::vector<double>& sumsq,
                                  size_t n, size_t w) {
    std::vector<double> tstat(n, 0.0);
    const double eta = DBL_MIN;
    for (size_t i = w; i + w <= n; ++i) {
        double sum1 = sum[i] - sum[i - w];
        double sumsq1 = sumsq[i] - sumsq[i - w];
        double sum2 = sum[i + w] - sum[i];
        double sumsq2 = sumsq[i + w] - sumsq[i];
        double mean1 = sum1 / static_cast<double>(w);
        double mean2 = sum2 / static_cast<double>(w);
        double var1 = sumsq1 / static_cast<double>(w) - mean1 * mean1;
        double var2 = sumsq2 / static_cast<double>(w) - mean2 * mean2;
        double combined = (var1 + var2) / static_cast<double>(w);
        if (combined < eta) combined = eta;
        tstat[i] = std::fabs(mean2 - mean1) / std::sqrt(combined);
    }
    return tstat;
}

struct Detector {
    const std::vector<double>* signal;
    double threshold;
    size_t window_length;
    long peak_pos = -1;
    double peak_value = DBL_MAX;
    long masked_to = 0;
    bool valid_peak = false;
};

// Short/long dual peak detector; the short detector masks the long one
// whenever it is going to fire.
std::vector<size_t> detect_peaks(const std::vector<double>& tstat1,
                                 const std::vector<double>& tstat2,
                                 const EventDetectionParams& p) {
    Detector short_d{&tstat1, p.threshold1, p.window1};
    Detector long_d{&tstat2, p.threshold2, p.window2};
    Detector* detectors[2] = {&short_d, &long_d};
    std::vector<size_t> peaks;
    size_t n = tstat1.size();
    for (size_t i = 0; i < n; ++i) {
        for (Detector* d : detectors) {
            if (d->masked_to >= static_cast<long>(i)) continue;
            double current = (*d->signal)[i];
            if (d->peak_pos == -1) {
                if (current < d->peak_value) {
                    d->peak_value = current;
                } else if (current - d->peak_value > p.peak_height) {
                    d->peak_value = current;
                    d->peak_pos = static_cast<long>(i);
                }
            } else {
                if (current > d->peak_value) {
                    d->peak_value = current;
                    d->peak_pos = static_cast<long>(i);
                }
                if (d == &short_d && d->peak_value > d->threshold) {
                    long_d.masked_to = d->peak_pos + static_cast<long>(d->window_length);
                    long_d.peak_pos = -1;
                    long_d.peak_value = DBL_MAX;
                    long_d.valid_peak = false;
                }
                if (d->peak_value - current > p.peak_height && d->peak_value > d->threshold)
                    d->valid_peak = true;
                if (d->valid_peak &&
                    static_cast<long>(i) - d->peak_pos > static_cast<long>(d->window_length / 2)) {
                    peaks.push_back(static_cast<size_t>(d->peak_pos));
                    d->peak_pos = -1;
                    d->peak_value = current;
                    d->valid_peak = false;
                }
            }
        }
    }
    return peaks;
}

Event make_event(const std::vector<double>& sum, const std::vector<double>& sumsq,
                 size_t start, size_t end) {
    Event e;
    e.start = start;
    e.length = end - start;
    double len = static_cast<double>(e.length);
    e.mean = (sum[end] - sum[start]) / len;
    double var = (sumsq[end] - sumsq[start]) / len - e.mean * e.mean;
    e.stdv = var > 0.0 ? std::sqrt(var) : 0.0;
    return e;
}

} // namespace

std::vector<Event> detect_events(const std::vector<double>& pa,
                                 const EventDetectionParams& params) {
    if (!params.valid()) throw Error("detect_events: invalid parameters");
    size_t n = pa.size();
    if (n <= 2 * params.window2)
        throw SignalTooShort("detect_events: " + std::to_string(n) +
                             " samples, need more than " + std::to_string(2 * params.window2));

    std::vector<double> sum(n + 1, 0.0), sumsq(n + 1, 0.0);
    for (size_t i = 0; i < n; ++i) {
        sum[i + 1] = sum[i] + pa[i];
        sumsq[i + 1] = sumsq[i] + pa[i] * pa[i];
    }
    std::vector<double> tstat1 = compute_tstat(sum, sumsq, n, params.window1);
    std::vector<double> tstat2 = compute_tstat(sum, sumsq, n, params.window2);
    std::vector<size_t> peaks = detect_peaks(tstat1, tstat2, params);

    std::vector<Event> events;
    size_t start = 0;
    for (size_t p : peaks) {
        if (p <= start || p >= n) continue;
        events.push_back(make_event(sum, sumsq, start, p));
        start = p;
    }
    events.push_back(make_event(sum, sumsq, start, n));
    return events;
}

EventQuery extract_query(const std::vector<Event>& events,
                         const EventDetectionParams& params,
                         const FixedPointParams& fp) {
    if (events.size() < params.prefix_trim + params.query_events)
        throw NotEnoughEvents("extract_query: " + std::to_string(events.size()) +
                              " events, need " +
                              std::to_string(params.prefix_trim + params.query_events));
    std::vector<double> means;
    means.reserve(params.query_events);
    for (size_t i = params.prefix_trim; i < params.prefix_trim + params.query_events; ++i)
        means.push_back(events[i].mean);

    EventQuery q;
    q.n_events = params.query_events;
    q.trimmed_prefix = params.prefix_trim;
    q.fp = fp;
    q.events_normalized = zscore_normalize(means);
    q.events_fixed = quantize(q.events_normalized, fp);
    return q;
}

} // namespace squig
