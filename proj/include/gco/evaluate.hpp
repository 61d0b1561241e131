#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gco/garble.hpp"

namespace gco {

struct EvaluationTrace {
  std::vector<GarbledWireValue> wires;  // per-wire values for all reached wires
  std::uint64_t gates_evaluated = 0;
  std::uint64_t hash_invocations = 0;  // exactly one per AND gate, none otherwise
  std::chrono::duration<double> elapsed{0};
};

/// Forward pass over public data only: the plain topology, the tables, and
/// the input wire values. XOR gates XOR the pair, INV gates pass it through
/// (the generator folded the inversion into the output mask), AND gates
/// decrypt the row selected by the two masked bits. Returns output-wire
/// values in circuit output order.
///
/// The signature is the isolation boundary: no Seed, Delta, mask, or
/// decoding data can reach this code path.
std::vector<GarbledWireValue> evaluate(const Circuit& circuit,
                                       const GarbledCircuit& gc,
                                       std::span<const GarbledWireValue> inputs,
                                       EvaluationTrace* trace = nullptr);

/// Either the decoded plaintext bits or an abort naming the first output
/// whose label is not one the generator assigned to that wire.
struct AuthResult {
  std::vector<Byte> bits;
  std::optional<std::uint32_t> abort_index;

  bool aborted() const { return abort_index.has_value(); }
};

/// Verifies each returned (z^, L) against the single label expected for that
/// masked bit and strips the mask. A mismatched count is an argument error,
/// not an abort: abort means the peer returned a label it could only have
/// made up.
AuthResult decode_outputs(const OutputDecoding& decoding,
                          std::span<const GarbledWireValue> outputs);

// Tamper harness. A trial flips one bit that the evaluation path actually
// consumes; bits nothing reads (the three inactive rows of a table, the
// padding bits of the z^ byte) would be trivially undetectable and prove
// nothing about output authentication.
enum class TamperTarget {
  ActiveTableRow,  // a bit of the 128 label bits or the z^ bit of the row the
                   // evaluator will decrypt, in a random table
  InputLabel,      // a bit of one input wire label
  OutputLabel,     // a bit of one returned output label
};

struct TamperSpec {
  TamperTarget target = TamperTarget::ActiveTableRow;
  std::uint64_t choice = 0;  // selects wire/gate/bit; reduced modulo what exists
};

struct TamperOutcome {
  bool aborted = false;
  bool forged_accept = false;  // accepted with bits != the plaintext oracle
};

/// Runs garble -> encode -> (mutate) -> evaluate -> decode and reports
/// whether the receiver aborted. With the identity mutation (no flip) the
/// decoded bits are checked against eval_plaintext instead.
TamperOutcome tamper_trial(const Circuit& circuit, const Seed& seed,
                           std::span<const Byte> inputs,
                           const std::optional<TamperSpec>& mutation);

}  // namespace gco
