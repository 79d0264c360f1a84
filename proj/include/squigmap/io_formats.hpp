#ifndef SQUIGMAP_IO_FORMATS_HPP
#define SQUIGMAP_IO_FORMATS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "squigmap/mapping.hpp"
#include "squigmap/types.hpp"

namespace squig {

// Lazy reader for the ASCII SLOW5 subset: '#'/'@' header lines, then
// TAB-separated records with the eight mandatory columns. Auxiliary
// columns are ignored.
class Slow5Reader {
public:
    explicit Slow5Reader(std::istream& in);

    // Returns false at end of file; throws on malformed records.
    bool next(RawRead& read);

private:
    std::istream& in_;
    size_t lineno_ = 0;
    bool header_done_ = false;

    void read_header();
};

class Slow5Writer {
public:
    explicit Slow5Writer(std::ostream& out);
    void write(const RawRead& read);

private:
    std::ostream& out_;
};

// Standard FASTA; sequences uppercased, whitespace stripped.
std::vector<std::pair<std::string, std::string>> read_fasta(std::istream& in);
std::vector<std::pair<std::string, std::string>> load_fasta(const std::string& path);

// TSV mapping output, one line per record, '#'-prefixed header.
void write_mappings_header(std::ostream& out);
void write_mapping(std::ostream& out, const MappingRecord& rec);

// Inverse of write_mapping, for tests and downstream tooling.
MappingRecord parse_mapping_line(const std::string& line);

} // namespace squig

#endif
