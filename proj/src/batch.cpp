#include "squigmap/batch.hpp"

#include <atomic>
#include <chrono>
#include <ostream>
#include <thread>

#include "squigmap/errors.hpp"
#include "squigmap/io_formats.hpp"

namespace squig {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct PerRead {
    bool ok = false;
    std::string error;
    MappingRecord record;
    double sec_pre = 0.0;
    double sec_sdtw = 0.0;
};

PerRead process_read(const RawRead& read, const std::vector<SignalIndex>& index,
                     const MapRunConfig& cfg) {
    PerRead out;
    try {
        auto t0 = Clock::now();
        std::vector<double> pa = dac_to_pa(read);
        std::vector<Event> events = detect_events(pa, cfg.event_params);
        EventQuery query = extract_query(events, cfg.event_params, index.front().params);
        query.read_id = read.read_id;
        out.sec_pre = seconds_since(t0);

        auto t1 = Clock::now();
        out.record = map_read_multi(query, index, cfg.engine);
        out.record.decision = decide(out.record, cfg.policy);
        out.sec_sdtw = seconds_since(t1);
        out.ok = true;
    } catch (const NotEnoughEvents&) {
        out.error = "unmapped: too short";
    } catch (const ZeroVariance&) {
        out.error = "unmapped: flat signal";
    } catch (const SignalTooShort&) {
        out.error = "unmapped: too short";
    }
    return out;
}

} // namespace

MapRunStats run_map(std::istream& slow5, const std::vector<SignalIndex>& index,
                    const MapRunConfig& cfg, std::ostream& out) {
    if (index.empty()) throw Error("run_map: empty index");
    if (cfg.threads < 1 || cfg.batch_size < 1)
        throw Error("run_map: threads and batch_size must be >= 1");

    MapRunStats stats;
    auto wall0 = Clock::now();
    Slow5Reader reader(slow5);
    write_mappings_header(out);

    std::vector<RawRead> batch;
    batch.reserve(cfg.batch_size);
    bool more = true;
    while (more) {
        auto t_load = Clock::now();
        batch.clear();
        RawRead read;
        while (batch.size() < cfg.batch_size && (more = reader.next(read)))
            batch.push_back(std::move(read));
        stats.sec_other += seconds_since(t_load);
        if (batch.empty()) break;

        std::vector<PerRead> results(batch.size());
        size_t n_workers = std::min(cfg.threads, batch.size());
        if (n_workers <= 1) {
            for (size_t i = 0; i < batch.size(); ++i)
                results[i] = process_read(batch[i], index, cfg);
        } else {
            std::atomic<size_t> next{0};
            std::vector<std::thread> workers;
            workers.reserve(n_workers);
            for (size_t w = 0; w < n_workers; ++w) {
                workers.emplace_back([&]() {
                    for (size_t i = next.fetch_add(1); i < batch.size();
                         i = next.fetch_add(1))
                        results[i] = process_read(batch[i], index, cfg);
                });
            }
            for (auto& t : workers) t.join();
        }

        auto t_write = Clock::now();
        for (const PerRead& r : results) {
            ++stats.n_reads;
            stats.sec_preprocess += r.sec_pre;
            stats.sec_sdtw += r.sec_sdtw;
            if (!r.ok) {
                ++stats.n_errors;
                ++stats.n_unmapped;
                continue;
            }
            switch (r.record.decision) {
                case Decision::accept: ++stats.n_accept; break;
                case Decision::reject: ++stats.n_reject; break;
                case Decision::unmapped: ++stats.n_unmapped; break;
            }
            write_mapping(out, r.record);
        }
        stats.sec_other += seconds_since(t_write);
    }
    stats.sec_wall = seconds_since(wall0);
    return stats;
}

void print_summary(std::ostream& out, const MapRunStats& stats) {
    double total = stats.sec_preprocess + stats.sec_sdtw + stats.sec_other;
    if (total <= 0.0) total = 1.0;
    auto pct = [&](double s) { return 100.0 * s / total; };
    out << "reads\t" << stats.n_reads << "\n"
        << "accept\t" << stats.n_accept << "\n"
        << "reject\t" << stats.n_reject << "\n"
        << "unmapped\t" << stats.n_unmapped << "\n"
        << "skipped\t" << stats.n_errors << "\n"
        << "wall_seconds\t" << stats.sec_wall << "\n"
        << "reads_per_second\t"
        << (stats.sec_wall > 0.0 ? static_cast<double>(stats.n_reads) / stats.sec_wall : 0.0)
        << "\n"
        << "pct_preprocess\t" << pct(stats.sec_preprocess) << "\n"
        << "pct_sdtw\t" << pct(stats.sec_sdtw) << "\n"
        << "pct_other\t" << pct(stats.sec_other) << "\n";
}

} // namespace squig
