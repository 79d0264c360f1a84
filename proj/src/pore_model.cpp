#include "squigmap/pore_model.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace squig {

static bool parse_double(const std::string& s, double& out) {
    try {
        size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size() && std::isfinite(out);
    } catch (const std::exception&) {
        return false;
    }
}

static bool valid_kmer(const std::string& s) {
    for (char c : s) {
        if (c != 'A' && c != 'C' && c != 'G' && c != 'T') return false;
    }
    return !s.empty();
}

PoreModel parse_pore_model(std::istream& in) {
    PoreModel model;
    model.k = 0;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, '\t')) cols.push_back(col);
        if (cols.size() < 2)
            throw MalformedLine("pore model line " + std::to_string(lineno) +
                                ": expected at least 2 TAB-separated columns");

        std::string kmer = cols[0];
        for (char& c : kmer) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (!valid_kmer(kmer))
            throw MalformedLine("pore model line " + std::to_string(lineno) +
                                ": invalid k-mer '" + cols[0] + "'");

        if (model.k == 0) {
            model.k = static_cast<int>(kmer.size());
        } else if (static_cast<int>(kmer.size()) != model.k) {
            throw InconsistentK("pore model line " + std::to_string(lineno) +
                                ": k-mer length " + std::to_string(kmer.size()) +
                                " differs from first line's " + std::to_string(model.k));
        }

        double mean;
        if (!parse_double(cols[1], mean))
            throw MalformedLine("pore model line " + std::to_string(lineno) +
                                ": non-numeric level_mean '" + cols[1] + "'");
        model.level_mean[kmer] = mean;

        if (cols.size() >= 3) {
            double stdv;
            if (!parse_double(cols[2], stdv))
                throw MalformedLine("pore model line " + std::to_string(lineno) +
                                    ": non-numeric level_stdv '" + cols[2] + "'");
            model.level_stdv[kmer] = stdv;
        }
    }
    if (model.k == 0) throw MissingKmer("pore model: no data lines");
    size_t expected = size_t{1} << (2 * model.k);
    if (model.level_mean.size() != expected)
        throw MissingKmer("pore model: " + std::to_string(model.level_mean.size()) +
                          " k-mers present, expected " + std::to_string(expected) +
                          " for k=" + std::to_string(model.k));
    return model;
}

PoreModel load_pore_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open pore model file: " + path);
    return parse_pore_model(in);
}

std::string reverse_complement(const std::string& bases) {
    std::string out(bases.size(), '\0');
    size_t n = bases.size();
    for (size_t i = 0; i < n; ++i) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(bases[i])));
        if (c == 'U') c = 'T';
        char comp;
        switch (c) {
            case 'A': comp = 'T'; break;
            case 'T': comp = 'A'; break;
            case 'C': comp = 'G'; break;
            case 'G': comp = 'C'; break;
            default:
                throw InvalidBase(std::string("reverse_complement: invalid base '") +
                                  bases[i] + "' at position " + std::to_string(i));
        }
        out[n - 1 - i] = comp;
    }
    return out;
}

std::vector<double> synthesize_signal(const std::string& bases, const PoreModel& model) {
    size_t k = static_cast<size_t>(model.k);
    if (bases.size() < k)
        throw SequenceTooShort("synthesize_signal: sequence length " +
                               std::to_string(bases.size()) + " < k=" + std::to_string(k));
    std::string upper = bases;
    for (char& c : upper) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (c == 'U') c = 'T';
        if (c != 'A' && c != 'C' && c != 'G' && c != 'T')
            throw InvalidBase(std::string("synthesize_signal: invalid base '") + c + "'");
    }
    std::vector<double> out;
    out.reserve(upper.size() - k + 1);
    for (size_t i = 0; i + k <= upper.size(); ++i) {
        auto it = model.level_mean.find(upper.substr(i, k));
        if (it == model.level_mean.end())
            throw MissingKmer("synthesize_signal: k-mer missing from model at position " +
                              std::to_string(i));
        out.push_back(it->second);
    }
    return out;
}

} // namespace squig
