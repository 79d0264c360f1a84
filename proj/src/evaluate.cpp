#include "squigmap/evaluate.hpp"

#include <cmath>

#include "squigmap/batch.hpp"
#include "squigmap/errors.hpp"
#include "squigmap/event_detect.hpp"
#include "squigmap/mapping.hpp"

namespace squig {

std::vector<ScalingPoint> eval_scaling(const std::string& bases, const PoreModel& model,
                                       const ScalingEvalConfig& cfg) {
    SimReadsConfig sim_cfg;
    sim_cfg.n_reads = cfg.n_reads;
    sim_cfg.seed = cfg.seed;
    sim_cfg.noise_sigma = cfg.noise_sigma;
    SimOutput sim = simulate_reads(bases, model, sim_cfg);

    EventDetectionParams ev;
    FixedPointParams base_fp;
    base_fp.overflow_mode = cfg.overflow_mode;
    SignalIndex base_index = build_index("ref", bases, model, base_fp);

    // queries extracted once; quantization is redone per scaling factor
    struct PreppedRead {
        EventQuery query;
        MappingRecord truth;
    };
    std::vector<PreppedRead> prepped;
    for (const RawRead& read : sim.reads) {
        try {
            std::vector<double> pa = dac_to_pa(read);
            std::vector<Event> events = detect_events(pa, ev);
            EventQuery q = extract_query(events, ev, base_fp);
            q.read_id = read.read_id;
            MappingRecord truth = map_read(q, base_index, EngineKind::float_banded);
            prepped.push_back({std::move(q), std::move(truth)});
        } catch (const Error&) {
            // degenerate read, skipped on both sides of the comparison
        }
    }

    std::vector<ScalingPoint> points;
    for (int32_t sf : cfg.sf_list) {
        FixedPointParams fp = base_fp;
        fp.scale_factor = sf;
        if (!fp.valid()) throw Error("eval_scaling: invalid scale factor " + std::to_string(sf));

        SignalIndex index = base_index;
        index.params = fp;
        index.forward_fixed = quantize(index.forward_norm, fp);
        index.reverse_fixed = quantize(index.reverse_norm, fp);

        ScalingPoint point;
        point.scale_factor = sf;
        for (const PreppedRead& pr : prepped) {
            EventQuery q = pr.query;
            q.fp = fp;
            q.events_fixed = quantize(q.events_normalized, fp);
            MappingRecord rec = map_read(q, index, EngineKind::fixed_banded);
            ++point.n_reads;
            bool agree = rec.strand == pr.truth.strand &&
                         std::llabs(static_cast<long long>(rec.position) -
                                    static_cast<long long>(pr.truth.position)) <=
                             static_cast<long long>(cfg.tolerance_samples);
            if (agree) ++point.n_agree;
        }
        point.agreement_pct = point.n_reads
                                  ? 100.0 * static_cast<double>(point.n_agree) /
                                        static_cast<double>(point.n_reads)
                                  : 0.0;
        points.push_back(point);
    }
    return points;
}

} // namespace squig
