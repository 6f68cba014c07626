#pragma once

#include <string>

#include "pgg/primes.hpp"

namespace pgg::primes {

// gaps.bin layout: magic "PGG1", u64 limit, u64 record count, u64 FNV-1a of
// the payload, then the gaps as LEB128 varints. Little-endian throughout.
struct GapCacheInfo {
    std::int64_t limit = 0;
    std::int64_t count = 0;
};

// Sieve up to `limit` and write the cache file.
GapCacheInfo write_gap_cache(const std::string& path, std::int64_t limit);

// Header only (validates magic, not the payload).
GapCacheInfo read_gap_cache_info(const std::string& path);

// Stream records from the cache, stopping at prime > max_prime when
// max_prime > 0. Verifies the checksum before emitting anything; a mismatch
// raises io_error("gap cache checksum mismatch ...").
GapCacheInfo stream_gap_cache(const std::string& path, std::int64_t max_prime,
                              const GapSink& sink);

// Make sure the cache covers `limit`: absent -> full sieve, stale -> resume
// sieving from the cached boundary and rewrite. Returns the resulting info.
GapCacheInfo ensure_gap_cache(const std::string& path, std::int64_t limit);

} // namespace pgg::primes
