#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gco {

using Byte = std::uint8_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Circuit-structure violation (bad wiring, count mismatch, invalid input length).
struct CircuitError : Error {
  using Error::Error;
};

/// Bristol text that does not conform to the format; carries the offending line.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

struct TransportError : Error {
  using Error::Error;
};

/// Peer misbehavior or malformed protocol traffic (bad frame, digest mismatch,
/// abort frame received).
struct ProtocolError : Error {
  using Error::Error;
};

/// 128-bit wire label. The two labels of any wire differ by the global Delta.
struct Label {
  std::array<Byte, 16> b{};

  friend Label operator^(Label x, const Label& y) {
    for (std::size_t i = 0; i < 16; ++i) x.b[i] ^= y.b[i];
    return x;
  }
  Label& operator^=(const Label& y) {
    for (std::size_t i = 0; i < 16; ++i) b[i] ^= y.b[i];
    return *this;
  }
  friend bool operator==(const Label&, const Label&) = default;

  bool is_zero() const {
    for (Byte v : b)
      if (v != 0) return false;
    return true;
  }
};

/// Global free-XOR offset; derivation guarantees it is never zero.
using Delta = Label;

/// 32 bytes of entropy; every seed-derived value is a deterministic
/// function of (Seed, Circuit).
struct Seed {
  std::array<Byte, 32> b{};
  friend bool operator==(const Seed&, const Seed&) = default;
};

std::string to_hex(std::span<const Byte> bytes);
std::vector<Byte> from_hex(std::string_view hex);

inline Seed seed_from_hex(std::string_view hex) {
  auto raw = from_hex(hex);
  if (raw.size() != 32) throw Error("seed must be 64 hex characters");
  Seed s;
  std::memcpy(s.b.data(), raw.data(), 32);
  return s;
}

// Bit vectors are stored one bit per byte (0 or 1), least significant bit
// first within multi-bit values.
std::vector<Byte> bits_from_u64(std::uint64_t value, unsigned width);
std::uint64_t bits_to_u64(std::span<const Byte> bits);

/// Bytes -> bits, LSB-first within each byte.
std::vector<Byte> bits_from_bytes(std::span<const Byte> bytes);

}  // namespace gco
