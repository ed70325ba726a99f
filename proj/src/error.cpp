#include "cyclespan/error.hpp"

namespace cyclespan {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::CapacityMismatch: return "CapacityMismatch";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::CycleLimitExceeded: return "CycleLimitExceeded";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::NotTriangulated: return "NotTriangulated";
    case ErrorCode::NotInFamilyForm: return "NotInFamilyForm";
    case ErrorCode::InvalidPlaneGraph: return "InvalidPlaneGraph";
    case ErrorCode::TreeLimitExceeded: return "TreeLimitExceeded";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotASpanningTree: return "NotASpanningTree";
    case ErrorCode::IncompleteTreeList: return "IncompleteTreeList";
    case ErrorCode::FamilyNotCycles: return "FamilyNotCycles";
    case ErrorCode::FamilyNotSubsetOfCycles: return "FamilyNotSubsetOfCycles";
    case ErrorCode::FacesNotAdjacent: return "FacesNotAdjacent";
    case ErrorCode::OuterFaceChosen: return "OuterFaceChosen";
    case ErrorCode::NoBindingFound: return "NoBindingFound";
    case ErrorCode::ClaimFailed: return "ClaimFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotACycleInFile: return "NotACycleInFile";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

bool is_resource_guard(ErrorCode code) noexcept {
  return code == ErrorCode::TreeLimitExceeded || code == ErrorCode::CycleLimitExceeded;
}

}  // namespace cyclespan
