#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heapkit {

enum class ErrorKind {
  // dynkin
  DimensionMismatch,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  AsymmetricZero,
  UnknownColor,
  // poset
  CoverCycle,
  TransitiveEdge,
  ColorUnused,
  ElementOutOfRange,
  NotComparable,
  CapExceeded,
  NotAnIdeal,
  NotAFilter,
  // axioms
  UnsupportedOnFinite,
  NotAHeap,
  ColorNotUnique,
  WouldViolateUCB1,
  DisconnectedResult,
  // heap_periodic
  NotLocallyFinite,
  AxiomFailure,
  ColorNotZChain,
  BadParameter,
  EmptyWindow,
  NoEligibleColor,
  NoConvergenceWithinBudget,
  // weyl
  Infeasible,
  // input documents
  InputError,
  // invariant broken inside the library
  InternalError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The message names the offending
/// entry (colors, elements, JSON path) so callers can print it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace heapkit
