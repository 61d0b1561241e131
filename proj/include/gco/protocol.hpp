#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gco/evaluate.hpp"
#include "gco/garble.hpp"
#include "gco/transport.hpp"

namespace gco {

// Wire format, bit-exact.
//
// Frame:   "TGH1" | version 0x01 | type | payload_length LE32 | payload
// Types:   0x01 GARBLED_TABLES   payload = serialized garbled circuit
//          0x02 INPUT_VALUES     payload = per input wire, 1 masked-bit byte
//                                          + 16 label bytes
//          0x03 OUTPUT_VALUES    payload = same per-wire encoding, output order
//          0x04 ABORT            payload empty (no detail leaves the session)
//
// Garbled circuit: digest(32) | and_count LE32 | tables in gate order, rows
// in order 00,01,10,11, 17 bytes each (68 per table).

inline constexpr std::array<Byte, 4> kFrameMagic = {'T', 'G', 'H', '1'};
inline constexpr Byte kFrameVersion = 0x01;

enum class MsgType : Byte {
  GarbledTables = 0x01,
  InputValues = 0x02,
  OutputValues = 0x03,
  Abort = 0x04,
};

struct Frame {
  MsgType type = MsgType::Abort;
  std::vector<Byte> payload;

  friend bool operator==(const Frame&, const Frame&) = default;
};

std::vector<Byte> encode_frame(const Frame& frame);
Frame decode_frame(std::span<const Byte> bytes);

void write_frame(Transport& transport, const Frame& frame);
Frame read_frame(Transport& transport);

std::vector<Byte> serialize_garbled_circuit(const GarbledCircuit& gc);
GarbledCircuit deserialize_garbled_circuit(std::span<const Byte> bytes);

std::vector<Byte> encode_wire_values(std::span<const GarbledWireValue> values);
std::vector<GarbledWireValue> decode_wire_values(std::span<const Byte> payload);

enum class Role { Generator, Evaluator, Client };

/// Generator and Client hold the seed; the Evaluator never does.
struct SessionConfig {
  const Circuit* circuit = nullptr;
  std::optional<Seed> seed;
  Role role = Role::Evaluator;
};

/// Throws if the config violates role invariants (evaluator with a seed,
/// generator/client without one, missing circuit).
void validate_config(const SessionConfig& config);

enum class Phase { Created, SetupDone, OnlineDone };

/// Trusted generator role: garbles during setup, serves the online phase
/// with input-independent material. Phase order is enforced; the online
/// phase cannot start before every table byte has crossed the transport.
class GeneratorSession {
 public:
  GeneratorSession(const Circuit& circuit, const Seed& seed);

  /// Sends the GARBLED_TABLES frame. Returns payload bytes sent
  /// (32 + 4 + 68 * and_count). May run before any input exists.
  std::size_t run_setup_phase(Transport& transport);

  /// Sends INPUT_VALUES, waits for OUTPUT_VALUES, decodes and authenticates.
  /// An ABORT frame from the peer surfaces as ProtocolError; a bad output
  /// label surfaces as an aborted AuthResult.
  AuthResult run_online_phase(std::span<const Byte> bits, Transport& transport);

  const GarbledCircuit& garbled_circuit() const { return garbled_.gc; }
  Phase phase() const { return phase_; }

 private:
  const Circuit& circuit_;
  Seed seed_;
  Garbled garbled_;
  Phase phase_ = Phase::Created;
};

/// Untrusted host role. Holds only public data: the plain topology and what
/// arrives over the transport.
class EvaluatorSession {
 public:
  explicit EvaluatorSession(const Circuit& circuit);

  /// Receives GARBLED_TABLES and checks the digest against its own circuit;
  /// on mismatch sends ABORT and throws.
  void run_setup_phase(Transport& transport);

  /// Receives INPUT_VALUES, evaluates, replies with OUTPUT_VALUES.
  void run_online_phase(Transport& transport);

  /// Both phases back to back; the usual serve loop body.
  void serve(Transport& transport);

  /// Test hook: corrupt the received tables before evaluation, modeling a
  /// cheating host.
  void set_tamper_hook(std::function<void(GarbledCircuit&)> hook) {
    tamper_hook_ = std::move(hook);
  }

  const EvaluationTrace& trace() const { return trace_; }
  Phase phase() const { return phase_; }

 private:
  const Circuit& circuit_;
  Digest expected_digest_;
  GarbledCircuit gc_;
  EvaluationTrace trace_;
  std::function<void(GarbledCircuit&)> tamper_hook_;
  Phase phase_ = Phase::Created;
};

/// Remote client role: holds the seed and circuit, never the tables. Encodes
/// inputs and decodes outputs purely from re-derived material, so the
/// generator sits outside the online critical path.
class ClientSession {
 public:
  ClientSession(const Circuit& circuit, const Seed& seed);

  AuthResult run_online_phase(std::span<const Byte> bits, Transport& transport);

 private:
  const Circuit& circuit_;
  WireMaterial material_;
};

/// Seed-only input encoding, byte-identical to the generator's
/// encode_inputs for the same (seed, circuit, bits).
std::vector<GarbledWireValue> client_encode_inputs(const Seed& seed,
                                                   const Circuit& circuit,
                                                   std::span<const Byte> bits);

/// One-shot wrappers over the session classes.
std::size_t run_setup_phase(const SessionConfig& generator, Transport& transport);
AuthResult run_online_phase(const SessionConfig& input_owner,
                            std::span<const Byte> bits, Transport& transport);

/// One generator process serving many independent client sessions, each with
/// its own seed. Sessions are keyed by (client id, circuit digest, seed
/// digest); the raw seed is never a key.
class GeneratorService {
 public:
  struct SessionKey {
    std::string client_id;
    Digest circuit_digest{};
    Digest seed_digest{};

    friend auto operator<=>(const SessionKey&, const SessionKey&) = default;
  };

  static SessionKey make_key(const std::string& client_id, const Circuit& circuit,
                             const Seed& seed);

  std::shared_ptr<GeneratorSession> open_session(const std::string& client_id,
                                                 const Circuit& circuit,
                                                 const Seed& seed);
  std::shared_ptr<GeneratorSession> find(const SessionKey& key) const;
  std::size_t session_count() const;

 private:
  mutable std::mutex mutex_;
  std::map<SessionKey, std::shared_ptr<GeneratorSession>> sessions_;
};

}  // namespace gco
