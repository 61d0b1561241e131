#pragma once

#include <array>
#include <span>

#include "gco/bytes.hpp"

namespace gco {

using Digest = std::array<Byte, 32>;

/// One-shot SHA-256. Reuses a thread-local context internally; safe to call
/// concurrently from different threads.
Digest sha256(std::span<const Byte> data);

}  // namespace gco
