#include "squigmap/io_formats.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "squigmap/errors.hpp"
#include "squigmap/sdtw.hpp"

namespace squig {

namespace {

const char* kColumns[8] = {"read_id", "read_group", "digitisation", "offset",
                           "range", "sampling_rate", "len_raw_signal", "raw_signal"};

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> cols;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            cols.push_back(line.substr(start));
            break;
        }
        cols.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return cols;
}

double parse_field_double(const std::string& s, size_t lineno, const char* what) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw MalformedLine("slow5 line " + std::to_string(lineno) + ": non-numeric " +
                            what + " '" + s + "'");
    }
}

} // namespace

Slow5Reader::Slow5Reader(std::istream& in) : in_(in) { read_header(); }

void Slow5Reader::read_header() {
    bool schema_seen = false;
    while (in_.peek() == '#' || in_.peek() == '@') {
        std::string line;
        std::getline(in_, line);
        ++lineno_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("#read_id", 0) == 0) {
            std::vector<std::string> cols = split_tabs(line);
            cols[0] = cols[0].substr(1); // drop '#'
            if (cols.size() < 8)
                throw BadHeader("slow5 line " + std::to_string(lineno_) +
                                ": column schema has fewer than 8 columns");
            for (size_t i = 0; i < 8; ++i) {
                if (cols[i] != kColumns[i])
                    throw BadHeader("slow5 line " + std::to_string(lineno_) +
                                    ": column " + std::to_string(i + 1) + " is '" +
                                    cols[i] + "', expected '" + kColumns[i] + "'");
            }
            schema_seen = true;
        }
    }
    if (!schema_seen)
        throw BadHeader("slow5: missing '#read_id ...' column schema line");
    header_done_ = true;
}

bool Slow5Reader::next(RawRead& read) {
    std::string line;
    while (std::getline(in_, line)) {
        ++lineno_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> cols = split_tabs(line);
        if (cols.size() < 8)
            throw MalformedLine("slow5 line " + std::to_string(lineno_) +
                                ": expected at least 8 columns, got " +
                                std::to_string(cols.size()));
        read.read_id = cols[0];
        read.digitisation = parse_field_double(cols[2], lineno_, "digitisation");
        read.offset = parse_field_double(cols[3], lineno_, "offset");
        read.range_pa = parse_field_double(cols[4], lineno_, "range");
        read.sampling_rate = parse_field_double(cols[5], lineno_, "sampling_rate");

        unsigned long long declared = 0;
        {
            auto [p, ec] = std::from_chars(cols[6].data(), cols[6].data() + cols[6].size(),
                                           declared);
            if (ec != std::errc() || p != cols[6].data() + cols[6].size())
                throw MalformedLine("slow5 line " + std::to_string(lineno_) +
                                    ": bad len_raw_signal '" + cols[6] + "'");
        }

        read.raw.clear();
        const std::string& sig = cols[7];
        size_t start = 0;
        while (start <= sig.size() && !sig.empty()) {
            size_t comma = sig.find(',', start);
            size_t end = comma == std::string::npos ? sig.size() : comma;
            int v = 0;
            auto [p, ec] = std::from_chars(sig.data() + start, sig.data() + end, v);
            if (ec != std::errc() || p != sig.data() + end || v < INT16_MIN || v > INT16_MAX)
                throw NonNumericSignal("slow5 line " + std::to_string(lineno_) +
                                       ": bad raw_signal value '" +
                                       sig.substr(start, end - start) + "'");
            read.raw.push_back(static_cast<int16_t>(v));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (read.raw.size() != declared)
            throw LengthMismatch("slow5 line " + std::to_string(lineno_) +
                                 ": len_raw_signal=" + std::to_string(declared) +
                                 " but " + std::to_string(read.raw.size()) +
                                 " values present");
        return true;
    }
    return false;
}

Slow5Writer::Slow5Writer(std::ostream& out) : out_(out) {
    out_ << "#slow5_version\t0.2.0\n"
         << "#num_read_groups\t1\n"
         << "@asic_id\t0\n"
         << "#char*\tuint32_t\tdouble\tdouble\tdouble\tdouble\tuint64_t\tint16_t*\n"
         << "#read_id\tread_group\tdigitisation\toffset\trange\tsampling_rate\t"
            "len_raw_signal\traw_signal\n";
}

void Slow5Writer::write(const RawRead& read) {
    char buf[64];
    auto fmt = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    out_ << read.read_id << "\t0\t" << fmt(read.digitisation) << '\t' << fmt(read.offset)
         << '\t' << fmt(read.range_pa) << '\t' << fmt(read.sampling_rate) << '\t'
         << read.raw.size() << '\t';
    for (size_t i = 0; i < read.raw.size(); ++i) {
        if (i) out_ << ',';
        out_ << read.raw[i];
    }
    out_ << '\n';
}

std::vector<std::pair<std::string, std::string>> read_fasta(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> records;
    std::string line, name, seq;
    auto flush = [&]() {
        if (name.empty()) return;
        if (seq.empty()) throw EmptySequence("fasta: record '" + name + "' has no sequence");
        records.emplace_back(name, seq);
        name.clear();
        seq.clear();
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            flush();
            size_t ws = line.find_first_of(" \t");
            name = line.substr(1, ws == std::string::npos ? std::string::npos : ws - 1);
            if (name.empty()) throw EmptySequence("fasta: record with empty name");
        } else {
            if (name.empty()) throw NoRecords("fasta: sequence data before any '>' header");
            for (char c : line) {
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                seq.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            }
        }
    }
    flush();
    if (records.empty()) throw NoRecords("fasta: no records");
    return records;
}

std::vector<std::pair<std::string, std::string>> load_fasta(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open FASTA file: " + path);
    return read_fasta(in);
}

void write_mappings_header(std::ostream& out) {
    out << "#read_id\tstrand\tposition_bases\tscore\tmapq\tdecision\toverflow_flag\tengine\n";
}

void write_mapping(std::ostream& out, const MappingRecord& rec) {
    out << rec.read_id << '\t' << (rec.strand == Strand::forward ? '+' : '-') << '\t'
        << rec.position_bases << '\t';
    if (rec.engine == EngineKind::fixed_banded || rec.engine == EngineKind::pe_sim) {
        out << static_cast<long long>(rec.score);
    } else {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", rec.score);
        out << buf;
    }
    out << '\t' << rec.mapq << '\t' << decision_name(rec.decision) << '\t'
        << (rec.overflow_flag ? 1 : 0) << '\t' << engine_name(rec.engine) << '\n';
}

MappingRecord parse_mapping_line(const std::string& line) {
    std::vector<std::string> cols = split_tabs(line);
    if (cols.size() != 8)
        throw MalformedLine("mapping line: expected 8 columns, got " +
                            std::to_string(cols.size()));
    MappingRecord rec;
    rec.read_id = cols[0];
    rec.strand = cols[1] == "+" ? Strand::forward : Strand::reverse;
    rec.position_bases = std::stoull(cols[2]);
    rec.score = std::stod(cols[3]);
    rec.mapq = std::stoi(cols[4]);
    if (cols[5] == "accept") rec.decision = Decision::accept;
    else if (cols[5] == "reject") rec.decision = Decision::reject;
    else rec.decision = Decision::unmapped;
    rec.overflow_flag = cols[6] == "1";
    if (cols[7] == "float-full") rec.engine = EngineKind::float_full;
    else if (cols[7] == "float-banded") rec.engine = EngineKind::float_banded;
    else if (cols[7] == "fixed") rec.engine = EngineKind::fixed_banded;
    else rec.engine = EngineKind::pe_sim;
    return rec;
}

} // namespace squig
