#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gco/bytes.hpp"

namespace gco {

using WireId = std::uint32_t;

enum class GateKind : Byte { And, Xor, Inv };

std::string_view gate_kind_name(GateKind kind);

/// Two-input gate; for Inv, `in1 == in0` by convention and only `in0` is read.
struct Gate {
  GateKind kind;
  WireId in0;
  WireId in1;
  WireId out;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// A boolean circuit over wires 0..num_wires-1 with gates stored in
/// topological order: each gate reads only circuit inputs or outputs of
/// earlier gates, and assigns a wire no other gate assigns.
///
/// Bristol-Fashion compatibility requires input_wires to be the first wires
/// and output_wires the last wires of the index space; the builders and the
/// parser both uphold this. input_groups/output_groups record the declared
/// bit-width grouping of the interface (e.g. two 8-bit operands) and are
/// preserved across parse/serialize.
struct Circuit {
  std::uint32_t num_wires = 0;
  std::vector<Gate> gates;
  std::vector<WireId> input_wires;
  std::vector<WireId> output_wires;
  std::vector<std::uint32_t> input_groups;
  std::vector<std::uint32_t> output_groups;
  std::string name;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    // Structural equality; the name is presentation only.
    return a.num_wires == b.num_wires && a.gates == b.gates &&
           a.input_wires == b.input_wires && a.output_wires == b.output_wires &&
           a.input_groups == b.input_groups && a.output_groups == b.output_groups;
  }
};

struct CircuitStats {
  std::uint64_t and_count = 0;
  std::uint64_t xor_count = 0;
  std::uint64_t inv_count = 0;
  std::uint32_t input_bits = 0;
  std::uint32_t output_bits = 0;
  std::uint32_t depth = 0;  // longest input->output gate path
};

struct ValidationReport {
  // Wires assigned by a gate but never consumed and not circuit outputs.
  // Real circuit files contain these; they are reported, not rejected.
  std::vector<WireId> dead_wires;
};

/// Checks every structural invariant (topological order, single assignment,
/// no duplicate interface wires, in-range indices). Throws CircuitError on
/// violation; dead wires are returned as warnings.
ValidationReport validate(const Circuit& circuit);

/// Parses Bristol-Fashion text:
///   <num_gates> <num_wires>
///   <n_input_groups> <size>...
///   <n_output_groups> <size>...
///   one gate per line: <n_in> <n_out> <in_wires...> <out_wire> <AND|XOR|INV>
/// Inputs are the first sum(input group sizes) wires, outputs the last
/// sum(output group sizes) wires. Tokens are whitespace-separated; LF and
/// CRLF both accepted. The returned circuit is validated.
Circuit parse_bristol(std::string_view text, std::string name = "");

/// Canonical Bristol-Fashion text (single spaces, LF). parse_bristol of the
/// result is structurally equal to the argument.
std::string serialize_bristol(const Circuit& circuit);

/// Ripple-carry adder: (a + b) mod 2^width over two width-bit little-endian
/// inputs. One AND per carry stage; the final stage emits no carry, so
/// and_count == width - 1 (width == 1 degenerates to a half adder whose
/// unused carry leaves and_count == 1).
Circuit build_adder(unsigned width);

/// Unsigned comparison a < b over two width-bit inputs, one output bit.
/// Borrow-chain construction, one AND per stage.
Circuit build_comparator(unsigned width);

/// Sums `items` prices of `price_width` bits (balanced tree of widening
/// adders) and outputs 1 iff total <= budget. Inputs: the prices, then a
/// budget of price_width + ceil(log2(items)) bits.
Circuit build_checkout(unsigned items, unsigned price_width);

/// Budget operand width used by build_checkout for the given shape.
unsigned checkout_budget_width(unsigned items, unsigned price_width);

/// Linear chain of AND gates: gate i consumes gate i-1's output and a fresh
/// input wire. Used by the throughput benchmark so table decryption, not
/// parallelism, is what gets measured.
Circuit build_and_chain(std::uint32_t gates);

/// Direct gate semantics in topological order. The reference oracle the
/// garbled pipeline is tested against. Inputs/outputs are bit vectors
/// (one 0/1 byte per wire, in interface order).
std::vector<Byte> eval_plaintext(const Circuit& circuit, std::span<const Byte> inputs);

CircuitStats stats(const Circuit& circuit);

}  // namespace gco
