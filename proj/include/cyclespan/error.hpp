#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclespan {

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  CapacityMismatch,
  CapacityExceeded,
  CycleLimitExceeded,
  NotACycle,
  KTooSmall,
  NotTriangulated,
  NotInFamilyForm,
  InvalidPlaneGraph,
  TreeLimitExceeded,
  Disconnected,
  NotASpanningTree,
  IncompleteTreeList,
  FamilyNotCycles,
  FamilyNotSubsetOfCycles,
  FacesNotAdjacent,
  OuterFaceChosen,
  NoBindingFound,
  ClaimFailed,
  ParseError,
  NotACycleInFile,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this one exception type; callers
// branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// True for the errors raised by enumeration guards (tree or cycle limits).
bool is_resource_guard(ErrorCode code) noexcept;

}  // namespace cyclespan
