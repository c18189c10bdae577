#include "edgechain/digest.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "edgechain/errors.hpp"

namespace edgechain {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(Errc::InvalidValue, "SHA-256 computation failed");
  }
  static const char hex[] = "0123456789abcdef";
  std::string out;
  out.resize(static_cast<std::size_t>(length) * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out[2 * i] = hex[digest[i] >> 4];
    out[2 * i + 1] = hex[digest[i] & 0x0f];
  }
  return out;
}

std::string to_decimal(double value, int precision) {
  if (!std::isfinite(value)) {
    throw Error(Errc::InvalidValue, "non-finite value in canonical payload");
  }
  if (value == 0.0) value = 0.0;  // normalize -0
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", precision, value);
  return buffer;
}

double from_decimal(const std::string& text) {
  char* end = nullptr;
  double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw Error(Errc::Parse, "malformed decimal string: " + text);
  }
  return value;
}

const std::string& zero_hash() {
  static const std::string zeros(64, '0');
  return zeros;
}

}  // namespace edgechain
