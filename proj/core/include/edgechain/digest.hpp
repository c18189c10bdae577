#pragma once

#include <string>
#include <string_view>

namespace edgechain {

/// Hex-encoded SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

/// Fixed-point decimal rendering of a fractional value ("1.250000000").
/// Canonical payloads carry fractions as decimal strings so that digests
/// are identical across platforms and serializer versions. Rejects
/// non-finite values.
std::string to_decimal(double value, int precision = 9);

/// Inverse of to_decimal for payload parsing.
double from_decimal(const std::string& text);

/// prev_hash of a genesis block: 32 zero bytes, hex encoded.
const std::string& zero_hash();

}  // namespace edgechain
