// digitpow/checkpoint.hpp — durable (multiplier, n, a^n) snapshots.
//
// File layout, LF line endings:
//
//   DIGITPOW-CKPT v1
//   multiplier=<a>
//   n=<n>
//   digest=<64 lowercase hex digits>
//   <a^n in decimal>
//
// The digest is SHA-256 over the file with the digest line removed, i.e.
// over "DIGITPOW-CKPT v1\nmultiplier=<a>\nn=<n>\n<value>\n". Files are
// written to a temporary sibling and renamed into place.

#pragma once

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "digitpow/decimal_nat.hpp"
#include "digitpow/power_state.hpp"

namespace digitpow {

inline constexpr std::string_view kCheckpointMagic = "DIGITPOW-CKPT v1";

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw CheckpointError("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

namespace detail {

inline std::string checkpoint_payload(std::uint64_t multiplier, std::uint64_t n, std::string_view value) {
  std::string p;
  p.append(kCheckpointMagic).append("\n");
  p.append("multiplier=").append(std::to_string(multiplier)).append("\n");
  p.append("n=").append(std::to_string(n)).append("\n");
  p.append(value).append("\n");
  return p;
}

inline std::uint64_t parse_field(const std::string& line, std::string_view key) {
  if (line.size() <= key.size() + 1 || line.compare(0, key.size(), key) != 0 || line[key.size()] != '=') {
    throw CheckpointError("checkpoint: expected \"" + std::string(key) + "=...\", got \"" + line + "\"");
  }
  const std::string_view digits = std::string_view(line).substr(key.size() + 1);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw CheckpointError("checkpoint: bad number in \"" + line + "\"");
  }
  return v;
}

}  // namespace detail

inline std::string encode_checkpoint(const PowerState& state) {
  const std::string value = state.value().to_decimal_string();
  const std::string digest = sha256_hex(detail::checkpoint_payload(state.multiplier(), state.n(), value));
  std::string out;
  out.append(kCheckpointMagic).append("\n");
  out.append("multiplier=").append(std::to_string(state.multiplier())).append("\n");
  out.append("n=").append(std::to_string(state.n())).append("\n");
  out.append("digest=").append(digest).append("\n");
  out.append(value).append("\n");
  return out;
}

inline PowerState decode_checkpoint(const std::string& text) {
  std::istringstream in(text);
  std::string magic, mult_line, n_line, digest_line, value;
  if (!std::getline(in, magic) || !std::getline(in, mult_line) || !std::getline(in, n_line) ||
      !std::getline(in, digest_line) || !std::getline(in, value)) {
    throw CheckpointError("checkpoint: truncated file");
  }
  if (magic != kCheckpointMagic) throw CheckpointError("checkpoint: unknown header \"" + magic + "\"");
  std::string rest;
  if (std::getline(in, rest) || !in.eof()) throw CheckpointError("checkpoint: trailing data after value");

  const std::uint64_t multiplier = detail::parse_field(mult_line, "multiplier");
  const std::uint64_t n = detail::parse_field(n_line, "n");
  if (digest_line.rfind("digest=", 0) != 0) throw CheckpointError("checkpoint: missing digest line");
  const std::string digest = digest_line.substr(7);
  if (digest != sha256_hex(detail::checkpoint_payload(multiplier, n, value))) {
    throw CheckpointError("checkpoint: digest mismatch");
  }

  DecimalNat v;
  try {
    v = DecimalNat::from_decimal_string(value);
  } catch (const std::invalid_argument& e) {
    throw CheckpointError(std::string("checkpoint: ") + e.what());
  }
  if (multiplier > 99) throw CheckpointError("checkpoint: multiplier out of range");
  try {
    return PowerState(static_cast<std::uint32_t>(multiplier), n, std::move(v));
  } catch (const std::invalid_argument& e) {
    throw CheckpointError(std::string("checkpoint: ") + e.what());
  }
}

inline void write_checkpoint(const std::filesystem::path& path, const PowerState& state) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("cannot open " + tmp.string() + " for writing");
    out << encode_checkpoint(state);
    out.flush();
    if (!out) throw CheckpointError("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

inline PowerState read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode_checkpoint(buf.str());
}

inline std::filesystem::path checkpoint_path(const std::filesystem::path& dir, const PowerState& state) {
  return dir / ("checkpoint-a" + std::to_string(state.multiplier()) + "-n" + std::to_string(state.n()) + ".ckpt");
}

}  // namespace digitpow
