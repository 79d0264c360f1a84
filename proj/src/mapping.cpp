#include "squigmap/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "squigmap/errors.hpp"
#include "squigmap/sdtw.hpp"

namespace squig {

const char* decision_name(Decision d) {
    switch (d) {
        case Decision::accept: return "accept";
        case Decision::reject: return "reject";
        case Decision::unmapped: return "unmapped";
    }
    return "?";
}

int compute_mapq(double best, double second) {
    if (best < 0.0 || second < 0.0)
        throw NegativeScore("compute_mapq: scores must be non-negative");
    if (second == 0.0) return 0;
    double q = std::round(60.0 * (second - best) / second);
    if (q < 0.0) q = 0.0;
    if (q > 60.0) q = 60.0;
    return static_cast<int>(q);
}

Decision decide(const MappingRecord& record, const SelectionPolicy& policy) {
    if (record.overflow_flag) return Decision::unmapped;
    if (record.mapq < policy.mapq_threshold) return Decision::unmapped;
    bool in_target = false;
    for (const TargetRegion& r : policy.target_regions) {
        if (!r.ref_name.empty() && r.ref_name != record.ref_name) continue;
        if (record.position_bases >= r.start && record.position_bases < r.end) {
            in_target = true;
            break;
        }
    }
    if (policy.mode == SelectionPolicy::Mode::target_enrichment)
        return in_target ? Decision::accept : Decision::reject;
    return in_target ? Decision::reject : Decision::accept;
}

namespace {

struct Candidate {
    SdtwResult res;
    const SignalIndex* index = nullptr;
};

SdtwResult run_engine(const EventQuery& query, const SignalIndex& index,
                      Strand strand, EngineKind engine,
                      const PeChainConfig* pe_config) {
    SdtwResult res;
    switch (engine) {
        case EngineKind::float_full:
            res = sdtw_full(query.events_normalized, index.norm(strand));
            break;
        case EngineKind::float_banded:
            res = sdtw_banded_float(query.events_normalized, index.norm(strand));
            break;
        case EngineKind::fixed_banded:
            res = sdtw_banded_fixed(query.events_fixed, index.fixed(strand), index.params);
            break;
        case EngineKind::pe_sim: {
            PeChainConfig cfg = pe_config ? *pe_config : PeChainConfig{};
            cfg.overflow_mode = index.params.overflow_mode;
            if (query.events_fixed.size() > cfg.chain_length)
                cfg.chain_length = query.events_fixed.size();
            PeChainSim sim(query.events_fixed, index.fixed(strand), cfg);
            res = sim.run_to_completion();
            break;
        }
    }
    res.strand = strand;
    return res;
}

bool fixed_engine(EngineKind e) {
    return e == EngineKind::fixed_banded || e == EngineKind::pe_sim;
}

MappingRecord from_candidates(const EventQuery& query, std::vector<Candidate> cands,
                              EngineKind engine) {
    // stable: earlier candidates win ties
    auto best_it = cands.begin();
    for (auto it = cands.begin() + 1; it != cands.end(); ++it)
        if (it->res.score < best_it->res.score) best_it = it;

    MappingRecord rec;
    rec.read_id = query.read_id;
    rec.ref_name = best_it->index->name;
    rec.strand = best_it->res.strand;
    rec.position = best_it->res.position;
    rec.position_bases = best_it->res.position + static_cast<size_t>(best_it->index->k) - 1;
    rec.score = best_it->res.score;
    rec.engine = engine;
    for (const Candidate& c : cands) rec.overflow_flag |= c.res.overflow_flag;

    double second = std::numeric_limits<double>::infinity();
    for (auto it = cands.begin(); it != cands.end(); ++it) {
        if (it == best_it) continue;
        second = std::min(second, it->res.score);
    }
    rec.second_best_score = second;

    if (rec.overflow_flag) {
        rec.mapq = 0;
    } else {
        double scale = fixed_engine(engine)
                           ? static_cast<double>(best_it->index->params.scale_factor)
                           : 1.0;
        rec.mapq = compute_mapq(rec.score / scale, second / scale);
    }
    return rec;
}

} // namespace

MappingRecord map_read(const EventQuery& query, const SignalIndex& index,
                       EngineKind engine, const PeChainConfig* pe_config) {
    if (fixed_engine(engine)) {
        if (query.fp.scale_factor != index.params.scale_factor ||
            query.fp.overflow_mode != index.params.overflow_mode)
            throw ParamsMismatch("map_read: query and index fixed-point params differ");
    }
    std::vector<Candidate> cands;
    cands.push_back({run_engine(query, index, Strand::forward, engine, pe_config), &index});
    cands.push_back({run_engine(query, index, Strand::reverse, engine, pe_config), &index});
    return from_candidates(query, std::move(cands), engine);
}

MappingRecord map_read_multi(const EventQuery& query,
                             const std::vector<SignalIndex>& records,
                             EngineKind engine, const PeChainConfig* pe_config) {
    if (records.empty()) throw Error("map_read_multi: no index records");
    if (records.size() == 1) {
        MappingRecord rec = map_read(query, records[0], engine, pe_config);
        return rec;
    }
    std::vector<Candidate> cands;
    for (const SignalIndex& idx : records) {
        if (fixed_engine(engine)) {
            if (query.fp.scale_factor != idx.params.scale_factor ||
                query.fp.overflow_mode != idx.params.overflow_mode)
                throw ParamsMismatch("map_read_multi: query and index fixed-point params differ");
        }
        cands.push_back({run_engine(query, idx, Strand::forward, engine, pe_config), &idx});
        cands.push_back({run_engine(query, idx, Strand::reverse, engine, pe_config), &idx});
    }
    return from_candidates(query, std::move(cands), engine);
}

} // namespace squig
