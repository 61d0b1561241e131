#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gco/circuit.hpp"
#include "gco/sha256.hpp"

namespace gco {

// All randomness is derived from one tree so a remote party holding only the
// seed regenerates the generator's material bit for bit:
//
//   PRF(seed, purpose, index) = SHA-256(seed(32) || purpose(1) || LE64(index))
//   purposes: DELTA = 0x00 (index 0), MASK = 0x01, LABEL0 = 0x02
//
// Labels take the first 16 digest bytes; masks take bit 0 of digest byte 0.

enum class PrfPurpose : Byte { DeltaTag = 0x00, Mask = 0x01, Label0 = 0x02 };

Label prf_label(const Seed& seed, PrfPurpose purpose, std::uint64_t index);

/// PRF-derived global offset, remapped to 0x01^16 in the (2^-128) all-zero
/// case so the free-XOR relation label1 = label0 ^ Delta never collapses.
Delta derive_delta(const Seed& seed);

namespace detail {
Label force_nonzero(Label label);
}

/// Per-wire secret held by the generator: the point-and-permute mask bit and
/// the label standing for plaintext 0.
struct WireSecret {
  Byte mask = 0;
  Label label0;
};

/// PRF material for one wire. Applies to circuit-input wires and AND-gate
/// output wires; XOR and INV outputs are derived structurally instead.
WireSecret derive_wire(const Seed& seed, WireId wire);

/// Row mask for one garbled table row, bit-exact for cross-language interop:
/// first 17 bytes of SHA-256(label_a || label_b || LE64(gate_index) || row).
/// gate_index is the 0-based ordinal of the AND gate (in circuit gate order)
/// and row encodes the masked input bits as 2*x^ + y^. Bytes 0..15 mask the
/// row's label part, byte 16 the masked-output-bit byte.
std::array<Byte, 17> gc_hash(const Label& label_a, const Label& label_b,
                             std::uint64_t gate_index, Byte row);

/// Four 17-byte rows indexed by (x^, y^) in order 00,01,10,11. Each row is
/// gc_hash(...) XOR (label(out, z^)(16) || z^ byte); the plaintext z^ byte
/// carries z^ in bit 0 with the remaining bits zero.
struct GarbledGate {
  std::uint32_t gate_index = 0;  // AND ordinal, also the hash tweak
  std::array<std::array<Byte, 17>, 4> rows{};

  friend bool operator==(const GarbledGate&, const GarbledGate&) = default;
};

/// Everything the evaluator receives: one table per AND gate in circuit
/// order, nothing for XOR/INV, bound to the circuit by digest.
struct GarbledCircuit {
  Digest circuit_digest{};
  std::vector<GarbledGate> tables;
  Byte format_version = 1;

  std::size_t table_bytes() const { return tables.size() * 68; }

  friend bool operator==(const GarbledCircuit&, const GarbledCircuit&) = default;
};

/// The (masked bit, label) pair that travels on every active wire. The label
/// is the one indexed by the masked bit: label == label(w, masked_bit).
struct GarbledWireValue {
  Byte masked_bit = 0;
  Label label;

  friend bool operator==(const GarbledWireValue&, const GarbledWireValue&) = default;
};

/// Per input wire, in circuit input order: enough to encode any input bit.
struct InputEncoding {
  std::vector<WireSecret> wires;
};

/// Per output wire, in circuit output order: mask plus both labels, the data
/// that authenticates and decodes returned output values.
struct OutputDecoding {
  struct Entry {
    Byte mask = 0;
    Label label0;
    Label label1;
  };
  std::vector<Entry> wires;
};

/// Secrets for every wire of a circuit, (mask, label0) each, plus Delta.
/// Input wires and AND outputs come from the PRF; XOR outputs are
/// mask0^mask1 / label0^label1; INV outputs flip the mask and keep the label.
/// This pass is all a seed-holding client needs to encode inputs and decode
/// outputs without touching the garbled tables.
struct WireMaterial {
  Delta delta;
  std::vector<Byte> mask;     // indexed by wire
  std::vector<Label> label0;  // indexed by wire

  Label label(WireId w, Byte bit) const {
    return bit ? label0[w] ^ delta : label0[w];
  }
};

WireMaterial derive_material(const Circuit& circuit, const Seed& seed);

/// SHA-256 of the canonical Bristol serialization; binds garbled material to
/// the exact circuit.
Digest circuit_digest(const Circuit& circuit);

struct Garbled {
  GarbledCircuit gc;
  InputEncoding input_encoding;
  OutputDecoding output_decoding;
};

/// Protocol setup-phase work: derives all wire material from the seed and
/// builds one garbled truth table per AND gate. Deterministic byte for byte
/// in (circuit, seed).
Garbled garble(const Circuit& circuit, const Seed& seed);

InputEncoding input_encoding_of(const Circuit& circuit, const WireMaterial& material);
OutputDecoding output_decoding_of(const Circuit& circuit, const WireMaterial& material);

/// bits[i] is input wire i's plaintext bit; emits (x^ = x ^ mask,
/// label(w, x^)) per wire. The mask, not the plaintext, decides which label
/// leaves the generator.
std::vector<GarbledWireValue> encode_inputs(const InputEncoding& encoding,
                                            std::span<const Byte> bits,
                                            const Delta& delta);

}  // namespace gco
