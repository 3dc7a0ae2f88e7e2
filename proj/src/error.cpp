#include "heapkit/error.hpp"

namespace heapkit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorKind::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorKind::AsymmetricZero: return "AsymmetricZero";
    case ErrorKind::UnknownColor: return "UnknownColor";
    case ErrorKind::CoverCycle: return "CoverCycle";
    case ErrorKind::TransitiveEdge: return "TransitiveEdge";
    case ErrorKind::ColorUnused: return "ColorUnused";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotAFilter: return "NotAFilter";
    case ErrorKind::UnsupportedOnFinite: return "UnsupportedOnFinite";
    case ErrorKind::NotAHeap: return "NotAHeap";
    case ErrorKind::ColorNotUnique: return "ColorNotUnique";
    case ErrorKind::WouldViolateUCB1: return "WouldViolateUCB1";
    case ErrorKind::DisconnectedResult: return "DisconnectedResult";
    case ErrorKind::NotLocallyFinite: return "NotLocallyFinite";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::ColorNotZChain: return "ColorNotZChain";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::NoEligibleColor: return "NoEligibleColor";
    case ErrorKind::NoConvergenceWithinBudget: return "NoConvergenceWithinBudget";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace heapkit
