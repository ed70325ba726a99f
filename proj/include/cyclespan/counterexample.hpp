#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclespan/cycles.hpp"
#include "cyclespan/error.hpp"
#include "cyclespan/plane.hpp"
#include "cyclespan/spanning.hpp"
#include "cyclespan/tree_graph.hpp"

namespace cyclespan {

// The assertions that together refute "arboreal + cyclically spanning on a
// 2-connected graph implies a connected tree graph".
enum class Claim { Biconnected, Arboreal, Spans, Disconnected, RhoUnique };

std::string_view to_string(Claim claim) noexcept;

struct Limits {
  std::size_t max_trees = kDefaultTreeLimit;
  std::size_t max_cycles = kDefaultCycleLimit;
};

// Internal faces with alpha replaced by alpha xor beta, in internal-face
// order (alpha's slot holds the replacement).
// Throws OuterFaceChosen or FacesNotAdjacent (not sharing exactly one edge).
CycleFamily build_cycle_family(const PlaneGraph& pg, FaceId alpha, FaceId beta);

struct LabelBinding {
  FaceId alpha = 0;
  FaceId beta = 0;
  FaceId rho = 0;
  // The trees of the first size-3 component of T(G,C), ascending.
  std::array<TreeId, 3> small_component_tree_ids{};

  friend bool operator==(const LabelBinding&, const LabelBinding&) = default;
};

// Everything learned about one (alpha, beta) choice. Evaluation stops at the
// first failing claim; later fields keep their defaults.
struct PairEvaluation {
  FaceId alpha = 0;
  FaceId beta = 0;
  bool arboreal = false;
  std::optional<TreeId> violating_tree;
  bool spans = false;
  std::size_t span_witness_max_length = 0;
  std::vector<ComponentSummary> components;
  bool disconnected = false;
  std::size_t size3_components = 0;
  bool rho_unique = false;
  // Every size-3 component (not only the first) has a single shared family
  // fundamental cycle.
  bool all_size3_rho_unique = false;
  std::optional<LabelBinding> binding;

  bool success() const noexcept { return binding.has_value(); }
  // First claim that failed, if any.
  std::optional<Claim> failed_claim() const noexcept;
};

// Trees and cycles of one graph, enumerated once and shared by every pair.
struct Enumeration {
  std::vector<SpanningTree> trees;
  std::vector<EdgeSet> cycles;
};

Enumeration enumerate_all(const Graph& g, const Limits& limits);

PairEvaluation evaluate_pair(const PlaneGraph& pg, const Enumeration& en, FaceId alpha, FaceId beta,
                             TreeGraphOptions tg_options = {});

// Ordered pairs of candidate internal faces sharing one edge, (alpha, beta)
// ascending.
std::vector<std::pair<FaceId, FaceId>> adjacent_face_pairs(const PlaneGraph& pg,
                                                           std::span<const FaceId> candidates);

// All bindings among the candidate faces, canonically ordered. Throws
// NoBindingFound when there is none.
std::vector<LabelBinding> find_alpha_beta(const PlaneGraph& pg, std::span<const FaceId> candidates,
                                          const Limits& limits = {});
// Candidates: all internal faces.
std::vector<LabelBinding> find_alpha_beta(const PlaneGraph& pg, const Limits& limits = {});
// Candidates: the innermost octahedron copy.
std::vector<LabelBinding> find_alpha_beta(const LayeredOctahedron& lo, const Limits& limits = {});

struct CounterexampleReport {
  std::size_t n = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  BigInt tree_count = 0;
  std::size_t cycle_count = 0;
  LabelBinding binding;
  std::vector<EdgeSet> family;
  bool biconnected = false;
  bool arboreal = false;
  bool spans = false;
  bool disconnected = false;
  bool rho_unique = false;
  std::size_t size3_components = 0;
  bool all_size3_rho_unique = false;
  std::vector<ComponentSummary> components;
  std::size_t span_witness_max_length = 0;
  // Per cycle (canonical cycle order): member indices of its witness.
  // Filled only on request.
  std::vector<std::vector<std::size_t>> witnesses;
  std::vector<EdgeSet> witness_targets;
  bool verdict = false;
  std::optional<Claim> failed_claim;
};

struct VerifyOptions {
  Limits limits;
  bool keep_witnesses = false;
};

// Raised when a claim about the construction does not hold. Carries the
// partial report so the caller can show which assertion broke.
class ClaimFailedError : public Error {
 public:
  ClaimFailedError(Claim claim, CounterexampleReport report);

  Claim claim() const noexcept { return claim_; }
  const CounterexampleReport& report() const noexcept { return report_; }

 private:
  Claim claim_;
  CounterexampleReport report_;
};

// Builds G_n, binds (alpha, beta) to the first pair of innermost faces for
// which every claim holds and reports. The tree count is checked against
// limits.max_trees via the determinant before anything is enumerated.
// Throws TreeLimitExceeded, CycleLimitExceeded or ClaimFailedError.
CounterexampleReport verify_counterexample(std::size_t n, const VerifyOptions& options = {});

// Scan of all spanning trees P of G_{t+1} for the layer-induction argument.
//  - Outer-layer scope: P has no fundamental cycle among the six faces of the
//    newest shell. Asserted: P restricted to G_t is a spanning tree of G_t and
//    has a fundamental cycle (in G_t) lying in C_t.
//  - Full scope: P has no fundamental cycle in C_{t+1} at all. Asserted: the
//    shell edges of P form a 3-edge path and P restricted to G_t spans G_t.
//    Arboreality makes this scope empty.
struct InductionReport {
  std::size_t t = 0;
  FaceId alpha = 0;  // face ids in G_0
  FaceId beta = 0;
  std::size_t trees_scanned = 0;
  std::size_t outer_scope_trees = 0;
  // Outer-scope trees whose shell edges happen to form a 3-edge path
  // (informational: the path shape is not implied at this scope).
  std::size_t outer_scope_three_paths = 0;
  std::size_t full_scope_trees = 0;
  std::size_t violations = 0;
  std::optional<TreeId> first_violation;
  std::string first_violation_reason;

  bool holds() const noexcept { return violations == 0; }
};

// alpha/beta given as G_0 face ids; nullopt picks the first octahedron binding.
InductionReport arboreal_induction_check(std::size_t t, const Limits& limits = {},
                                         std::optional<std::pair<FaceId, FaceId>> g0_pair = std::nullopt);

// Maps a face of the innermost octahedron (G_0 face id) to its id in G_n.
FaceId map_innermost_face(const PlaneGraph& g0, FaceId f, const PlaneGraph& gn);

}  // namespace cyclespan
