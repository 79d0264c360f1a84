#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "squigmap/batch.hpp"
#include "squigmap/errors.hpp"
#include "squigmap/evaluate.hpp"
#include "squigmap/io_formats.hpp"
#include "squigmap/pe_chain.hpp"
#include "squigmap/sdtw.hpp"
#include "squigmap/signal_index.hpp"
#include "squigmap/simulate.hpp"

using namespace squig;

namespace {

EngineKind parse_engine(const std::string& name) {
    if (name == "float-full") return EngineKind::float_full;
    if (name == "float-banded") return EngineKind::float_banded;
    if (name == "fixed") return EngineKind::fixed_banded;
    if (name == "pe-sim") return EngineKind::pe_sim;
    throw CLI::ValidationError("--engine", "unknown engine '" + name + "'");
}

std::vector<TargetRegion> parse_targets(const std::string& arg) {
    std::vector<TargetRegion> regions;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        TargetRegion r;
        size_t colon = item.rfind(':');
        std::string range = item;
        if (colon != std::string::npos) {
            r.ref_name = item.substr(0, colon);
            range = item.substr(colon + 1);
        }
        size_t dash = range.find('-');
        if (dash == std::string::npos)
            throw CLI::ValidationError("--targets", "expected chr:start-end, got '" + item + "'");
        r.start = std::stoull(range.substr(0, dash));
        r.end = std::stoull(range.substr(dash + 1));
        if (r.end <= r.start)
            throw CLI::ValidationError("--targets", "empty interval in '" + item + "'");
        regions.push_back(std::move(r));
    }
    return regions;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signal-domain selective sequencing read mapper"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; flags take precedence");
    app.allow_config_extras(true);

    // index
    auto* cmd_index = app.add_subcommand("index", "build a signal index from FASTA + pore model");
    std::string idx_fasta, idx_model, idx_out = "ref.sqix";
    int32_t idx_sf = 32;
    std::string idx_ovf = "wrap";
    cmd_index->add_option("fasta", idx_fasta, "reference FASTA")->required();
    cmd_index->add_option("model", idx_model, "k-mer pore model (TSV)")->required();
    cmd_index->add_option("-o,--output", idx_out, "index output path");
    cmd_index->add_option("--scale-factor", idx_sf, "power-of-two quantization scale");
    cmd_index->add_option("--overflow-mode", idx_ovf, "wrap|saturate");

    // map
    auto* cmd_map = app.add_subcommand("map", "map SLOW5 reads against an index");
    std::string map_slow5, map_index, map_out = "-", map_engine = "float-banded";
    std::string map_targets, map_mode = "enrich", map_summary;
    size_t map_threads = 1, map_batch = 512;
    int map_mapq_threshold = 20;
    cmd_map->add_option("slow5", map_slow5, "ASCII SLOW5 input")->required();
    cmd_map->add_option("index", map_index, "signal index")->required();
    cmd_map->add_option("-o,--output", map_out, "mappings TSV ('-' for stdout)");
    cmd_map->add_option("--engine", map_engine, "float-full|float-banded|fixed|pe-sim");
    cmd_map->add_option("--threads", map_threads, "worker threads")->check(CLI::PositiveNumber);
    cmd_map->add_option("--batch-size", map_batch, "reads per batch")->check(CLI::PositiveNumber);
    cmd_map->add_option("--mapq-threshold", map_mapq_threshold, "selection MAPQ threshold");
    cmd_map->add_option("--targets", map_targets, "target regions chr:start-end[,..]");
    cmd_map->add_option("--mode", map_mode, "enrich|deplete");
    cmd_map->add_option("--summary", map_summary, "summary output path (default stderr)");

    // simreads
    auto* cmd_sim = app.add_subcommand("simreads", "generate synthetic SLOW5 reads + truth");
    std::string sr_fasta, sr_model, sr_out = "sim.slow5", sr_truth = "sim_truth.tsv";
    size_t sr_n = 100;
    uint64_t sr_seed = 42;
    double sr_noise = 0.0, sr_dup = 0.0;
    cmd_sim->add_option("fasta", sr_fasta, "reference FASTA")->required();
    cmd_sim->add_option("model", sr_model, "k-mer pore model (TSV)")->required();
    cmd_sim->add_option("-o,--output", sr_out, "SLOW5 output path");
    cmd_sim->add_option("--truth", sr_truth, "truth TSV output path");
    cmd_sim->add_option("-n,--n-reads", sr_n, "number of reads");
    cmd_sim->add_option("--seed", sr_seed, "RNG seed");
    cmd_sim->add_option("--noise-sigma", sr_noise,
                        "per-event noise, relative to the reference level spread");
    cmd_sim->add_option("--dup-prob", sr_dup, "event duplication probability (needs noise)");

    // eval-scaling
    auto* cmd_eval = app.add_subcommand("eval-scaling",
                                        "fixed vs float position agreement per scale factor");
    std::string ev_fasta, ev_model, ev_out = "-", ev_sf_list = "2,8,32,128";
    size_t ev_n = 1000;
    uint64_t ev_seed = 42;
    double ev_noise = 0.2;
    cmd_eval->add_option("fasta", ev_fasta, "reference FASTA")->required();
    cmd_eval->add_option("model", ev_model, "k-mer pore model (TSV)")->required();
    cmd_eval->add_option("-o,--output", ev_out, "TSV output ('-' for stdout)");
    cmd_eval->add_option("--sf-list", ev_sf_list, "comma-separated powers of two");
    cmd_eval->add_option("-n,--n-reads", ev_n, "number of synthetic reads");
    cmd_eval->add_option("--seed", ev_seed, "RNG seed");
    cmd_eval->add_option("--noise-sigma", ev_noise, "per-event noise level");

    // simulate
    auto* cmd_simulate = app.add_subcommand("simulate",
                                            "run the PE-chain simulator on SLOW5 queries");
    std::string pe_slow5, pe_index, pe_out = "-", pe_trace;
    double pe_clock = 100e6;
    cmd_simulate->add_option("slow5", pe_slow5, "ASCII SLOW5 input")->required();
    cmd_simulate->add_option("index", pe_index, "signal index")->required();
    cmd_simulate->add_option("-o,--output", pe_out, "latency report TSV ('-' for stdout)");
    cmd_simulate->add_option("--clock-hz", pe_clock, "simulated clock rate");
    cmd_simulate->add_option("--trace", pe_trace, "per-cycle trace TSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_index) {
            FixedPointParams fp;
            fp.scale_factor = idx_sf;
            if (idx_ovf == "saturate") fp.overflow_mode = OverflowMode::saturate;
            else if (idx_ovf != "wrap") throw Error("--overflow-mode must be wrap or saturate");
            if (!fp.valid()) throw Error("--scale-factor must be a power of two in [2, 16384]");
            PoreModel model = load_pore_model(idx_model);
            std::vector<SignalIndex> records;
            for (const auto& [name, bases] : load_fasta(idx_fasta))
                records.push_back(build_index(name, bases, model, fp));
            write_index(records, idx_out);
            std::cerr << "indexed " << records.size() << " record(s), "
                      << records.front().n_samples() << " samples per strand (first record)\n";
            return 0;
        }

        if (*cmd_map) {
            MapRunConfig cfg;
            cfg.engine = parse_engine(map_engine);
            cfg.threads = map_threads;
            cfg.batch_size = map_batch;
            cfg.policy.mapq_threshold = map_mapq_threshold;
            cfg.policy.target_regions = parse_targets(map_targets);
            if (map_mode == "deplete")
                cfg.policy.mode = SelectionPolicy::Mode::target_depletion;
            else if (map_mode != "enrich")
                throw Error("--mode must be enrich or deplete");

            std::vector<SignalIndex> index = read_index(map_index);
            std::ifstream slow5(map_slow5);
            if (!slow5) throw Error("cannot open SLOW5 file: " + map_slow5);

            MapRunStats stats;
            if (map_out == "-") {
                stats = run_map(slow5, index, cfg, std::cout);
            } else {
                std::ofstream out = open_out(map_out);
                stats = run_map(slow5, index, cfg, out);
            }
            if (map_summary.empty()) {
                print_summary(std::cerr, stats);
            } else {
                std::ofstream sum = open_out(map_summary);
                print_summary(sum, stats);
            }
            return stats.n_errors > 0 ? 1 : 0;
        }

        if (*cmd_sim) {
            PoreModel model = load_pore_model(sr_model);
            auto fasta = load_fasta(sr_fasta);
            SimReadsConfig cfg;
            cfg.n_reads = sr_n;
            cfg.seed = sr_seed;
            cfg.noise_sigma = sr_noise;
            cfg.event_dup_prob = sr_dup;
            SimOutput sim = simulate_reads(fasta.front().second, model, cfg);

            std::ofstream out = open_out(sr_out);
            Slow5Writer writer(out);
            for (const RawRead& r : sim.reads) writer.write(r);
            std::ofstream truth = open_out(sr_truth);
            truth << "#read_id\tstrand\tend_position\n";
            for (const SimTruth& t : sim.truth)
                truth << t.read_id << '\t' << (t.strand == Strand::forward ? '+' : '-')
                      << '\t' << t.end_position << '\n';
            std::cerr << "wrote " << sim.reads.size() << " reads\n";
            return 0;
        }

        if (*cmd_eval) {
            PoreModel model = load_pore_model(ev_model);
            auto fasta = load_fasta(ev_fasta);
            ScalingEvalConfig cfg;
            cfg.n_reads = ev_n;
            cfg.seed = ev_seed;
            cfg.noise_sigma = ev_noise;
            cfg.sf_list.clear();
            std::stringstream ss(ev_sf_list);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) cfg.sf_list.push_back(std::stoi(item));

            auto points = eval_scaling(fasta.front().second, model, cfg);
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (ev_out != "-") {
                file = open_out(ev_out);
                out = &file;
            }
            *out << "#scale_factor\tn_reads\tn_agree\tagreement_pct\n";
            for (const ScalingPoint& p : points)
                *out << p.scale_factor << '\t' << p.n_reads << '\t' << p.n_agree << '\t'
                     << p.agreement_pct << '\n';
            return 0;
        }

        if (*cmd_simulate) {
            std::vector<SignalIndex> index = read_index(pe_index);
            std::ifstream slow5(pe_slow5);
            if (!slow5) throw Error("cannot open SLOW5 file: " + pe_slow5);

            std::ostream* out = &std::cout;
            std::ofstream file;
            if (pe_out != "-") {
                file = open_out(pe_out);
                out = &file;
            }
            std::ofstream trace_out;
            bool tracing = !pe_trace.empty();
            if (tracing) {
                trace_out = open_out(pe_trace);
                trace_out << "#cycle\tactive_pes\tbest_score\tbest_position\n";
            }

            *out << "#read_id\tref\tstrand\tn_ref_samples\tcycles\tseconds\tposition\tscore"
                    "\toverflow\n";
            EventDetectionParams ev;
            Slow5Reader reader(slow5);
            RawRead read;
            size_t n_errors = 0;
            while (reader.next(read)) {
                try {
                    std::vector<double> pa = dac_to_pa(read);
                    std::vector<Event> events = detect_events(pa, ev);
                    EventQuery q = extract_query(events, ev, index.front().params);
                    q.read_id = read.read_id;
                    for (const SignalIndex& idx : index) {
                        for (Strand strand : {Strand::forward, Strand::reverse}) {
                            PeChainConfig cfg;
                            cfg.overflow_mode = idx.params.overflow_mode;
                            if (q.events_fixed.size() > cfg.chain_length)
                                cfg.chain_length = q.events_fixed.size();
                            PeChainSim sim(q.events_fixed, idx.fixed(strand), cfg);
                            std::vector<PeTraceRow> trace;
                            SdtwResult res = sim.run_to_completion(tracing ? &trace : nullptr);
                            if (tracing) {
                                trace_out << "#" << q.read_id << "\t"
                                          << (strand == Strand::forward ? '+' : '-') << "\n";
                                for (const PeTraceRow& row : trace)
                                    trace_out << row.cycle << '\t' << row.active_pes << '\t'
                                              << row.best_score << '\t' << row.best_position
                                              << '\n';
                            }
                            *out << q.read_id << '\t' << idx.name << '\t'
                                 << (strand == Strand::forward ? '+' : '-') << '\t'
                                 << idx.n_samples() << '\t' << sim.total_cycles() << '\t'
                                 << estimate_latency(sim.total_cycles(), pe_clock) << '\t'
                                 << res.position << '\t'
                                 << static_cast<long long>(res.score) << '\t'
                                 << (res.overflow_flag ? 1 : 0) << '\n';
                        }
                    }
                } catch (const NotEnoughEvents&) {
                    ++n_errors;
                } catch (const ZeroVariance&) {
                    ++n_errors;
                } catch (const SignalTooShort&) {
                    ++n_errors;
                }
            }
            return n_errors > 0 ? 1 : 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
