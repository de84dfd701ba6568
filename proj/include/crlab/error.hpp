#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace crlab {

enum class ErrorKind {
  SizeMismatch,
  InvalidArgument,
  Singular,
  WrongFieldMode,
  Inconsistent,
  InvariantFailure,
  NonCommuting,
  ExtensionUnsupported,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Indices of a basis pair that witnesses a failure (e.g. a commutator of
/// rank >= 2). Indices refer to the canonical basis of the offending space.
struct BasisPairWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t commutator_rank = 0;
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what,
        std::optional<BasisPairWitness> witness = std::nullopt)
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<BasisPairWitness> &witness() const noexcept {
    return witness_;
  }

private:
  ErrorKind kind_;
  std::optional<BasisPairWitness> witness_;
};

} // namespace crlab
