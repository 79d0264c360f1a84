#ifndef SQUIGMAP_PORE_MODEL_HPP
#define SQUIGMAP_PORE_MODEL_HPP

#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

#include "squigmap/errors.hpp"

namespace squig {

// k-mer -> expected current level table
struct PoreModel {
    int k = 6;
    std::unordered_map<std::string, double> level_mean;
    std::unordered_map<std::string, double> level_stdv; // optional, may be empty

    double level(const std::string& kmer) const { return level_mean.at(kmer); }
};

// TAB-separated model file: `kmer<TAB>level_mean[<TAB>level_stdv...]`,
// '#'-prefixed comment lines. k is inferred from the first data line.
PoreModel parse_pore_model(std::istream& in);
PoreModel load_pore_model(const std::string& path);

// A<->T, C<->G, reversed. Case-insensitive, 'U' mapped to 'T'.
std::string reverse_complement(const std::string& bases);

// one level per k-mer window; output length = len(bases) - k + 1
std::vector<double> synthesize_signal(const std::string& bases, const PoreModel& model);

} // namespace squig

#endif
