#include "pgg/gap_cache.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

namespace pgg::primes {

namespace {

constexpr char kMagic[4] = {'P', 'G', 'G', '1'};

void put_u64(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(const char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
    return v;
}

void put_varint(std::string& buf, std::uint64_t v) {
    while (v >= 0x80) {
        buf.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    buf.push_back(static_cast<char>(v));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("gap cache: cannot open " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

void write_atomically(const std::string& path, const std::string& data) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("gap cache: cannot write " + tmp);
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
    }
    std::filesystem::rename(tmp, path);
}

std::string encode(std::int64_t limit, const std::vector<std::int64_t>& gaps) {
    std::string payload;
    payload.reserve(gaps.size() + 16);
    for (std::int64_t g : gaps) put_varint(payload, static_cast<std::uint64_t>(g));
    std::string out(kMagic, 4);
    put_u64(out, static_cast<std::uint64_t>(limit));
    put_u64(out, gaps.size());
    put_u64(out, fnv1a64(payload.data(), payload.size()));
    out += payload;
    return out;
}

} // namespace

GapCacheInfo write_gap_cache(const std::string& path, std::int64_t limit) {
    std::vector<std::int64_t> gaps;
    sieve_gaps(limit, [&](const GapRecord& r) {
        gaps.push_back(r.gap);
        return true;
    });
    write_atomically(path, encode(limit, gaps));
    return {limit, static_cast<std::int64_t>(gaps.size())};
}

GapCacheInfo read_gap_cache_info(const std::string& path) {
    std::string data = read_file(path);
    if (data.size() < 28 || std::memcmp(data.data(), kMagic, 4) != 0)
        throw io_error("gap cache: bad magic in " + path);
    return {static_cast<std::int64_t>(get_u64(data.data() + 4)),
            static_cast<std::int64_t>(get_u64(data.data() + 12))};
}

GapCacheInfo stream_gap_cache(const std::string& path, std::int64_t max_prime,
                              const GapSink& sink) {
    std::string data = read_file(path);
    if (data.size() < 28 || std::memcmp(data.data(), kMagic, 4) != 0)
        throw io_error("gap cache: bad magic in " + path);
    GapCacheInfo info{static_cast<std::int64_t>(get_u64(data.data() + 4)),
                      static_cast<std::int64_t>(get_u64(data.data() + 12))};
    std::uint64_t want = get_u64(data.data() + 20);
    std::uint64_t got = fnv1a64(data.data() + 28, data.size() - 28);
    if (want != got) throw io_error("gap cache checksum mismatch in " + path);

    const char* p = data.data() + 28;
    const char* end = data.data() + data.size();
    std::int64_t prime = 1, index = 0;
    while (p < end && index < info.count) {
        std::uint64_t g = 0;
        int shift = 0;
        for (;;) {
            if (p >= end) throw io_error("gap cache: truncated varint in " + path);
            unsigned char b = static_cast<unsigned char>(*p++);
            g |= static_cast<std::uint64_t>(b & 0x7f) << shift;
            if (!(b & 0x80)) break;
            shift += 7;
        }
        ++index;
        prime += static_cast<std::int64_t>(g);
        if (max_prime > 0 && prime > max_prime) return info;
        if (!sink(GapRecord{index, prime, static_cast<std::int64_t>(g)})) return info;
    }
    if (index != info.count)
        throw io_error("gap cache: record count mismatch in " + path);
    return info;
}

GapCacheInfo ensure_gap_cache(const std::string& path, std::int64_t limit) {
    if (!std::filesystem::exists(path)) return write_gap_cache(path, limit);
    GapCacheInfo info = read_gap_cache_info(path);
    if (info.limit >= limit) return info;
    // resume from the cached boundary rather than re-sieving from scratch
    std::vector<std::int64_t> gaps;
    gaps.reserve(info.count);
    GapRecord last{0, 1, 0};
    stream_gap_cache(path, 0, [&](const GapRecord& r) {
        gaps.push_back(r.gap);
        last = r;
        return true;
    });
    sieve_gaps_resume(last, limit, [&](const GapRecord& r) {
        gaps.push_back(r.gap);
        return true;
    });
    write_atomically(path, encode(limit, gaps));
    return {limit, static_cast<std::int64_t>(gaps.size())};
}

} // namespace pgg::primes
