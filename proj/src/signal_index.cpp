#include "squigmap/signal_index.hpp"

#include <cstring>
#include <fstream>

#include <json.hpp>

namespace squig {

SignalIndex build_index(const std::string& name, const std::string& bases,
                        const PoreModel& model, const FixedPointParams& params) {
    if (!params.valid()) throw Error("build_index: invalid fixed-point params");
    SignalIndex idx;
    idx.name = name;
    idx.params = params;
    idx.k = model.k;

    std::vector<double> fwd = synthesize_signal(bases, model);
    std::vector<double> rev = synthesize_signal(reverse_complement(bases), model);

    mean_std(fwd, idx.forward_mean, idx.forward_std);
    mean_std(rev, idx.reverse_mean, idx.reverse_std);

    idx.forward_norm = zscore_normalize(fwd);
    idx.reverse_norm = zscore_normalize(rev);
    idx.forward_fixed = quantize(idx.forward_norm, params);
    idx.reverse_fixed = quantize(idx.reverse_norm, params);
    return idx;
}

namespace {

constexpr char kMagic[4] = {'S', 'Q', 'I', 'X'};
constexpr uint16_t kVersion = 1;

// All scalars written little-endian.
template <typename T>
void put(std::ostream& out, T v) {
    unsigned char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_BIG_ENDIAN__
    for (size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(buf[i], buf[sizeof(T) - 1 - i]);
#endif
    out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    unsigned char buf[sizeof(T)];
    in.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (!in) throw BadIndexFile("index file truncated");
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_BIG_ENDIAN__
    for (size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(buf[i], buf[sizeof(T) - 1 - i]);
#endif
    T v;
    std::memcpy(&v, buf, sizeof(T));
    return v;
}

void put_string(std::ostream& out, const std::string& s) {
    put<uint32_t>(out, static_cast<uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_string(std::istream& in) {
    uint32_t n = get<uint32_t>(in);
    std::string s(n, '\0');
    in.read(s.data(), n);
    if (!in) throw BadIndexFile("index file truncated");
    return s;
}

template <typename T>
void put_array(std::ostream& out, const std::vector<T>& v) {
    put<uint64_t>(out, static_cast<uint64_t>(v.size()));
    for (T x : v) put<T>(out, x);
}

template <typename T>
std::vector<T> get_array(std::istream& in) {
    uint64_t n = get<uint64_t>(in);
    std::vector<T> v(n);
    for (uint64_t i = 0; i < n; ++i) v[i] = get<T>(in);
    return v;
}

} // namespace

void write_index(const std::vector<SignalIndex>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open index file for writing: " + path);
    out.write(kMagic, 4);
    put<uint16_t>(out, kVersion);
    put<uint32_t>(out, static_cast<uint32_t>(records.size()));
    for (const SignalIndex& idx : records) {
        put_string(out, idx.name);
        put<int32_t>(out, idx.params.scale_factor);
        put<int32_t>(out, idx.params.sample_bits);
        put<int32_t>(out, idx.params.accum_bits);
        put<uint8_t>(out, static_cast<uint8_t>(idx.params.overflow_mode));
        put<int32_t>(out, idx.k);
        put<double>(out, idx.forward_mean);
        put<double>(out, idx.forward_std);
        put<double>(out, idx.reverse_mean);
        put<double>(out, idx.reverse_std);
        put_array<int16_t>(out, idx.forward_fixed);
        put_array<int16_t>(out, idx.reverse_fixed);
        put_array<double>(out, idx.forward_norm);
        put_array<double>(out, idx.reverse_norm);
    }
    if (!out) throw Error("write failure on index file: " + path);

    nlohmann::json j;
    j["format_version"] = kVersion;
    j["records"] = nlohmann::json::array();
    for (const SignalIndex& idx : records) {
        j["records"].push_back({
            {"name", idx.name},
            {"n_samples", idx.n_samples()},
            {"k", idx.k},
            {"scale_factor", idx.params.scale_factor},
            {"overflow_mode", idx.params.overflow_mode == OverflowMode::wrap ? "wrap" : "saturate"},
            {"forward_mean", idx.forward_mean},
            {"forward_std", idx.forward_std},
            {"reverse_mean", idx.reverse_mean},
            {"reverse_std", idx.reverse_std},
        });
    }
    std::ofstream side(path + ".json");
    if (side) side << j.dump(2) << "\n";
}

std::vector<SignalIndex> read_index(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open index file: " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw BadIndexFile("bad magic in index file: " + path);
    uint16_t version = get<uint16_t>(in);
    if (version != kVersion)
        throw BadIndexFile("unsupported index version " + std::to_string(version));
    uint32_t count = get<uint32_t>(in);
    std::vector<SignalIndex> records;
    records.reserve(count);
    for (uint32_t r = 0; r < count; ++r) {
        SignalIndex idx;
        idx.name = get_string(in);
        idx.params.scale_factor = get<int32_t>(in);
        idx.params.sample_bits = get<int32_t>(in);
        idx.params.accum_bits = get<int32_t>(in);
        idx.params.overflow_mode = static_cast<OverflowMode>(get<uint8_t>(in));
        idx.k = get<int32_t>(in);
        idx.forward_mean = get<double>(in);
        idx.forward_std = get<double>(in);
        idx.reverse_mean = get<double>(in);
        idx.reverse_std = get<double>(in);
        idx.forward_fixed = get_array<int16_t>(in);
        idx.reverse_fixed = get_array<int16_t>(in);
        idx.forward_norm = get_array<double>(in);
        idx.reverse_norm = get_array<double>(in);
        if (idx.forward_fixed.size() != idx.reverse_fixed.size())
            throw BadIndexFile("strand length mismatch in index record " + idx.name);
        records.push_back(std::move(idx));
    }
    return records;
}

} // namespace squig
