#include "weierforge/error.hpp"

namespace weierforge {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::PoleTooClose: return "PoleTooClose";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::ZeroOnPath: return "ZeroOnPath";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case ErrorKind::BadDivisor: return "BadDivisor";
    case ErrorKind::ZeroOnBoundary: return "ZeroOnBoundary";
    case ErrorKind::WindingMismatch: return "WindingMismatch";
    case ErrorKind::RegularityFailure: return "RegularityFailure";
    case ErrorKind::NullityFailure: return "NullityFailure";
    case ErrorKind::RepresentationOverflow: return "RepresentationOverflow";
    case ErrorKind::DegenerateTriple: return "DegenerateTriple";
    case ErrorKind::ZeroOnArc: return "ZeroOnArc";
    case ErrorKind::BlendFailure: return "BlendFailure";
    case ErrorKind::BracketNotFound: return "BracketNotFound";
    case ErrorKind::WrongSign: return "WrongSign";
    case ErrorKind::RefitFailure: return "RefitFailure";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NewtonDiverged: return "NewtonDiverged";
    case ErrorKind::StageFailed: return "StageFailed";
  }
  return "Unknown";
}

}  // namespace weierforge
