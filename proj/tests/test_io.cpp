#include <doctest.h>

#include <random>
#include <sstream>

#include "squigmap/io_formats.hpp"
#include "squigmap/errors.hpp"

using namespace squig;

namespace {

const char* kHeader =
    "#slow5_version\t0.2.0\n"
    "#num_read_groups\t1\n"
    "@asic_id\t0\n"
    "#read_id\tread_group\tdigitisation\toffset\trange\tsampling_rate\t"
    "len_raw_signal\traw_signal\n";

RawRead random_read(std::mt19937_64& rng, const std::string& id) {
    std::uniform_int_distribution<int> len(1, 400), dac(-2000, 2000);
    RawRead r;
    r.read_id = id;
    r.digitisation = 8192;
    r.offset = 3.5;
    r.range_pa = 1469.3;
    r.sampling_rate = 4000;
    r.raw.resize(static_cast<size_t>(len(rng)));
    for (int16_t& v : r.raw) v = static_cast<int16_t>(dac(rng));
    return r;
}

} // namespace

TEST_CASE("slow5: minimal record") {
    std::stringstream ss(std::string(kHeader) +
                         "r1\t0\t8192\t5\t1469.3\t4000\t4\t10,-20,30,-40\n");
    Slow5Reader reader(ss);
    RawRead r;
    REQUIRE(reader.next(r));
    CHECK(r.read_id == "r1");
    CHECK(r.digitisation == 8192.0);
    CHECK(r.offset == 5.0);
    CHECK(r.range_pa == doctest::Approx(1469.3));
    CHECK(r.sampling_rate == 4000.0);
    CHECK(r.raw == std::vector<int16_t>{10, -20, 30, -40});
    CHECK_FALSE(reader.next(r));
}

TEST_CASE("slow5: auxiliary columns are ignored") {
    std::stringstream ss(std::string(kHeader) +
                         "r1\t0\t8192\t5\t1469.3\t4000\t2\t7,8\taux1\taux2\n");
    Slow5Reader reader(ss);
    RawRead r;
    REQUIRE(reader.next(r));
    CHECK(r.raw == std::vector<int16_t>{7, 8});
}

TEST_CASE("slow5: declared length must match the signal") {
    std::stringstream ss(std::string(kHeader) + "r1\t0\t8192\t5\t1469.3\t4000\t3\t10,20\n");
    Slow5Reader reader(ss);
    RawRead r;
    CHECK_THROWS_AS(reader.next(r), LengthMismatch);
}

TEST_CASE("slow5: non-numeric signal values are rejected") {
    std::stringstream ss(std::string(kHeader) + "r1\t0\t8192\t5\t1469.3\t4000\t2\t10,xx\n");
    Slow5Reader reader(ss);
    RawRead r;
    CHECK_THROWS_AS(reader.next(r), NonNumericSignal);
}

TEST_CASE("slow5: missing columns are rejected") {
    std::stringstream ss(std::string(kHeader) + "r1\t0\t8192\t5\n");
    Slow5Reader reader(ss);
    RawRead r;
    CHECK_THROWS_AS(reader.next(r), MalformedLine);
}

TEST_CASE("slow5: missing or reordered schema line is rejected") {
    std::stringstream empty("");
    CHECK_THROWS_AS(Slow5Reader{empty}, BadHeader);

    std::stringstream no_schema("#slow5_version\t0.2.0\nr1\t0\t1\t0\t1\t1\t1\t5\n");
    CHECK_THROWS_AS(Slow5Reader{no_schema}, BadHeader);

    std::stringstream reordered(
        "#read_id\tdigitisation\tread_group\toffset\trange\tsampling_rate\t"
        "len_raw_signal\traw_signal\n");
    CHECK_THROWS_AS(Slow5Reader{reordered}, BadHeader);
}

TEST_CASE("slow5: writer output reads back identically") {
    std::mt19937_64 rng(71);
    std::vector<RawRead> reads;
    for (int i = 0; i < 50; ++i) reads.push_back(random_read(rng, "read" + std::to_string(i)));

    std::stringstream ss;
    Slow5Writer writer(ss);
    for (const RawRead& r : reads) writer.write(r);

    Slow5Reader reader(ss);
    RawRead got;
    for (const RawRead& expect : reads) {
        REQUIRE(reader.next(got));
        CHECK(got.read_id == expect.read_id);
        CHECK(got.digitisation == expect.digitisation);
        CHECK(got.offset == expect.offset);
        CHECK(got.range_pa == expect.range_pa);
        CHECK(got.sampling_rate == expect.sampling_rate);
        CHECK(got.raw == expect.raw);
    }
    CHECK_FALSE(reader.next(got));
}

TEST_CASE("fasta parsing") {
    std::stringstream ss(">chr1 some description\nacgt\nACGT\n\n>chr2\nTTTT\n");
    auto records = read_fasta(ss);
    REQUIRE(records.size() == 2);
    CHECK(records[0].first == "chr1");
    CHECK(records[0].second == "ACGTACGT");
    CHECK(records[1].first == "chr2");
    CHECK(records[1].second == "TTTT");
}

TEST_CASE("fasta error cases") {
    std::stringstream empty("");
    CHECK_THROWS_AS(read_fasta(empty), NoRecords);
    std::stringstream headerless("ACGT\n");
    CHECK_THROWS_AS(read_fasta(headerless), NoRecords);
    std::stringstream no_seq(">chr1\n>chr2\nACGT\n");
    CHECK_THROWS_AS(read_fasta(no_seq), EmptySequence);
}

TEST_CASE("mapping line round trip") {
    MappingRecord rec;
    rec.read_id = "readX";
    rec.strand = Strand::reverse;
    rec.position = 1234;
    rec.position_bases = 1239;
    rec.score = 17.25;
    rec.mapq = 42;
    rec.decision = Decision::accept;
    rec.overflow_flag = false;
    rec.engine = EngineKind::float_banded;

    std::stringstream ss;
    write_mappings_header(ss);
    write_mapping(ss, rec);

    std::string line;
    std::getline(ss, line);
    CHECK(line[0] == '#');
    std::getline(ss, line);
    MappingRecord got = parse_mapping_line(line);
    CHECK(got.read_id == rec.read_id);
    CHECK(got.strand == rec.strand);
    CHECK(got.position_bases == rec.position_bases);
    CHECK(got.score == rec.score);
    CHECK(got.mapq == rec.mapq);
    CHECK(got.decision == rec.decision);
    CHECK(got.overflow_flag == rec.overflow_flag);
    CHECK(got.engine == rec.engine);
}

TEST_CASE("fixed-engine scores are written as integers") {
    MappingRecord rec;
    rec.read_id = "r";
    rec.score = 512.0;
    rec.engine = EngineKind::fixed_banded;
    rec.decision = Decision::reject;
    std::stringstream ss;
    write_mapping(ss, rec);
    CHECK(ss.str().find("\t512\t") != std::string::npos);
    MappingRecord got = parse_mapping_line(ss.str().substr(0, ss.str().size() - 1));
    CHECK(got.score == 512.0);
    CHECK(got.engine == EngineKind::fixed_banded);
}

TEST_CASE("float score round trip is exact through %.17g") {
    std::mt19937_64 rng(72);
    std::uniform_real_distribution<double> val(0.0, 100.0);
    for (int i = 0; i < 100; ++i) {
        MappingRecord rec;
        rec.read_id = "r";
        rec.score = val(rng);
        rec.engine = EngineKind::float_full;
        std::stringstream ss;
        write_mapping(ss, rec);
        std::string line = ss.str();
        line.pop_back();
        CHECK(parse_mapping_line(line).score == rec.score);
    }
}
