#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <utility>

#include "gco/bytes.hpp"

namespace gco {

/// Reliable ordered duplex byte channel. send blocks until every byte is
/// accepted, recv blocks until the span is filled. Single sender and single
/// receiver per direction.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual void send(std::span<const Byte> data) = 0;
  virtual void recv(std::span<Byte> data) = 0;
  virtual void close() = 0;
  virtual std::string_view kind() const = 0;
};

inline constexpr std::size_t kSharedBufferDefaultCapacity = 4u << 20;

/// Two connected in-process endpoints backed by a pair of single-producer/
/// single-consumer ring buffers, standing in for unencrypted memory pages
/// shared between the generator and host processes. No kernel networking is
/// involved.
std::pair<std::unique_ptr<Transport>, std::unique_ptr<Transport>>
make_shared_buffer_pair(std::size_t capacity = kSharedBufferDefaultCapacity);

/// Listening TCP socket on 127.0.0.1. Construct with port 0 for an ephemeral
/// port, read it back with port().
class LoopbackListener {
 public:
  explicit LoopbackListener(std::uint16_t port = 0);
  ~LoopbackListener();
  LoopbackListener(const LoopbackListener&) = delete;
  LoopbackListener& operator=(const LoopbackListener&) = delete;

  std::uint16_t port() const { return port_; }
  std::unique_ptr<Transport> accept();

 private:
  int fd_ = -1;
  std::uint16_t port_ = 0;
};

std::unique_ptr<Transport> connect_loopback(std::uint16_t port);

}  // namespace gco
