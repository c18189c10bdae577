#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgechain {

enum class Errc {
  DuplicateId,
  DanglingReference,
  InvalidValue,
  CapacityExceeded,
  NoRoute,
  AlreadyPlaced,
  NotPlaced,
  Unplaced,
  InvalidChain,
  TooLarge,
  Replay,
  Parse,
};

/// Domain error carrying a machine-checkable code next to the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised when folding a ledger back into a world state hits an
/// inconsistent block; names the offending block index.
class ReplayError : public Error {
 public:
  ReplayError(std::size_t block_index, const std::string& cause)
      : Error(Errc::Replay,
              "replay failed at block " + std::to_string(block_index) + ": " + cause),
        block_index_(block_index) {}

  std::size_t block_index() const noexcept { return block_index_; }

 private:
  std::size_t block_index_;
};

}  // namespace edgechain
