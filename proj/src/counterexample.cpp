#include "cyclespan/counterexample.hpp"

#include <algorithm>
#include <string>

#include "cyclespan/union_find.hpp"

namespace cyclespan {

std::string_view to_string(Claim claim) noexcept {
  switch (claim) {
    case Claim::Biconnected: return "BICONNECTED";
    case Claim::Arboreal: return "ARBOREAL";
    case Claim::Spans: return "SPANS";
    case Claim::Disconnected: return "DISCONNECTED";
    case Claim::RhoUnique: return "RHO_UNIQUE";
  }
  return "UNKNOWN";
}

CycleFamily build_cycle_family(const PlaneGraph& pg, FaceId alpha, FaceId beta) {
  if (alpha >= pg.face_count() || beta >= pg.face_count()) {
    throw Error(ErrorCode::FacesNotAdjacent, "face id out of range");
  }
  if (alpha == pg.outer_face() || beta == pg.outer_face()) {
    throw Error(ErrorCode::OuterFaceChosen, "alpha and beta must be internal faces");
  }
  if (alpha == beta || (pg.face(alpha) & pg.face(beta)).count() != 1) {
    throw Error(ErrorCode::FacesNotAdjacent, "faces " + std::to_string(alpha) + " and " +
                                                 std::to_string(beta) + " do not share exactly one edge");
  }
  std::vector<EdgeSet> members;
  for (FaceId f : pg.internal_faces()) {
    members.push_back(f == alpha ? pg.face(alpha) ^ pg.face(beta) : pg.face(f));
  }
  return CycleFamily(pg.graph(), std::move(members));
}

std::optional<Claim> PairEvaluation::failed_claim() const noexcept {
  if (!arboreal) return Claim::Arboreal;
  if (!spans) return Claim::Spans;
  if (!disconnected || size3_components == 0) return Claim::Disconnected;
  if (!rho_unique) return Claim::RhoUnique;
  return std::nullopt;
}

Enumeration enumerate_all(const Graph& g, const Limits& limits) {
  const BigInt expected = count_spanning_trees(g);
  if (expected > BigInt(limits.max_trees)) {
    throw Error(ErrorCode::TreeLimitExceeded,
                expected.str() + " spanning trees exceed the limit of " + std::to_string(limits.max_trees));
  }
  Enumeration en;
  en.trees = enumerate_spanning_trees(g, limits.max_trees);
  en.cycles = enumerate_cycles(g, limits.max_cycles);
  return en;
}

namespace {

// The single family member shared by every tree of a component, if each tree
// has exactly one family fundamental cycle and they all agree.
std::optional<std::size_t> shared_single_member(const Graph& g, const Enumeration& en,
                                                const CycleFamily& family, std::span<const TreeId> members) {
  std::optional<std::size_t> shared;
  for (TreeId t : members) {
    const auto fc = family_fundamental_cycles(g, en.trees[t], family);
    if (fc.size() != 1) return std::nullopt;
    if (shared && *shared != fc.front()) return std::nullopt;
    shared = fc.front();
  }
  return shared;
}

}  // namespace

PairEvaluation evaluate_pair(const PlaneGraph& pg, const Enumeration& en, FaceId alpha, FaceId beta,
                             TreeGraphOptions tg_options) {
  const Graph& g = pg.graph();
  PairEvaluation ev;
  ev.alpha = alpha;
  ev.beta = beta;
  const CycleFamily family = build_cycle_family(pg, alpha, beta);

  const ArborealResult arb = is_arboreal(g, en.trees, family);
  ev.arboreal = arb.arboreal;
  ev.violating_tree = arb.violating_tree;
  if (!ev.arboreal) return ev;

  const SpanResult span = cyclically_spans(g, family, en.cycles);
  ev.spans = span.spans();
  ev.span_witness_max_length = span.max_witness_length();
  if (!ev.spans) return ev;

  const TreeGraphAdjacency tg = build_tree_graph(g, en.trees, family, tg_options);
  ev.components = components_summary(tg);
  ev.disconnected = tg.component_count() >= 2;

  // Group the members of every size-3 component by label.
  const auto labels = tg.component_labels();
  std::vector<std::size_t> label_size(tg.component_count(), 0);
  for (auto l : labels) ++label_size[l];
  std::vector<std::vector<TreeId>> small(tg.component_count());
  for (TreeId i = 0; i < labels.size(); ++i) {
    if (label_size[labels[i]] == 3) small[labels[i]].push_back(i);
  }
  std::optional<LabelBinding> first;
  bool all_unique = true;
  // Labels follow first appearance, so ascending labels give ascending representatives.
  for (const auto& members : small) {
    if (members.empty()) continue;
    ++ev.size3_components;
    const auto shared = shared_single_member(g, en, family, members);
    std::optional<FaceId> rho_face;
    if (shared) rho_face = pg.find_face(family[*shared]);
    if (!rho_face) all_unique = false;
    if (ev.size3_components == 1) {
      ev.rho_unique = rho_face.has_value();
      if (rho_face) first = LabelBinding{alpha, beta, *rho_face, {members[0], members[1], members[2]}};
    }
  }
  ev.all_size3_rho_unique = ev.size3_components > 0 && all_unique;
  if (ev.disconnected && ev.rho_unique) ev.binding = first;
  return ev;
}

std::vector<std::pair<FaceId, FaceId>> adjacent_face_pairs(const PlaneGraph& pg,
                                                           std::span<const FaceId> candidates) {
  std::vector<FaceId> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<FaceId, FaceId>> out;
  for (FaceId a : sorted) {
    if (a == pg.outer_face()) continue;
    for (FaceId b : sorted) {
      if (b == pg.outer_face() || a == b) continue;
      if ((pg.face(a) & pg.face(b)).count() == 1) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<LabelBinding> find_alpha_beta(const PlaneGraph& pg, std::span<const FaceId> candidates,
                                          const Limits& limits) {
  const Enumeration en = enumerate_all(pg.graph(), limits);
  std::vector<LabelBinding> out;
  for (auto [a, b] : adjacent_face_pairs(pg, candidates)) {
    const PairEvaluation ev = evaluate_pair(pg, en, a, b);
    if (ev.binding) out.push_back(*ev.binding);
  }
  if (out.empty()) throw Error(ErrorCode::NoBindingFound, "no (alpha, beta) pair satisfies every claim");
  return out;
}

std::vector<LabelBinding> find_alpha_beta(const PlaneGraph& pg, const Limits& limits) {
  const auto internal = pg.internal_faces();
  return find_alpha_beta(pg, internal, limits);
}

std::vector<LabelBinding> find_alpha_beta(const LayeredOctahedron& lo, const Limits& limits) {
  return find_alpha_beta(lo.plane, lo.innermost_faces, limits);
}

ClaimFailedError::ClaimFailedError(Claim claim, CounterexampleReport report)
    : Error(ErrorCode::ClaimFailed, "claim " + std::string(to_string(claim)) + " failed for G_" +
                                        std::to_string(report.n)),
      claim_(claim),
      report_(std::move(report)) {}

CounterexampleReport verify_counterexample(std::size_t n, const VerifyOptions& options) {
  const LayeredOctahedron lo = layered_octahedron(n);
  const PlaneGraph& pg = lo.plane;
  const Graph& g = pg.graph();

  CounterexampleReport report;
  report.n = n;
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  report.faces = pg.face_count();
  report.tree_count = count_spanning_trees(g);
  report.biconnected = is_biconnected(g);

  const Enumeration en = enumerate_all(g, options.limits);
  report.cycle_count = en.cycles.size();
  if (BigInt(en.trees.size()) != report.tree_count) {
    throw Error(ErrorCode::IncompleteTreeList, "enumeration disagrees with the determinant");
  }

  // Large instances only need component labels.
  const TreeGraphOptions tg_options{en.trees.size() <= 100'000};
  std::optional<PairEvaluation> chosen;
  std::optional<PairEvaluation> furthest;
  for (auto [a, b] : adjacent_face_pairs(pg, lo.innermost_faces)) {
    PairEvaluation ev = evaluate_pair(pg, en, a, b, tg_options);
    if (ev.success()) {
      chosen = std::move(ev);
      break;
    }
    if (!furthest || static_cast<int>(*ev.failed_claim()) > static_cast<int>(*furthest->failed_claim())) {
      furthest = std::move(ev);
    }
  }
  const PairEvaluation& ev = chosen ? *chosen : *furthest;

  const CycleFamily family = build_cycle_family(pg, ev.alpha, ev.beta);
  report.family.assign(family.cycles().begin(), family.cycles().end());
  report.arboreal = ev.arboreal;
  report.spans = ev.spans;
  report.disconnected = ev.disconnected;
  report.rho_unique = ev.rho_unique;
  report.size3_components = ev.size3_components;
  report.all_size3_rho_unique = ev.all_size3_rho_unique;
  report.components = ev.components;
  report.span_witness_max_length = ev.span_witness_max_length;
  if (ev.binding) {
    report.binding = *ev.binding;
  } else {
    report.binding.alpha = ev.alpha;
    report.binding.beta = ev.beta;
  }
  if (options.keep_witnesses && ev.spans) {
    const SpanResult span = cyclically_spans(g, family, en.cycles);
    for (std::size_t i = 0; i < span.cycle_count(); ++i) {
      report.witness_targets.push_back(span.cycles()[i]);
      report.witnesses.push_back(span.witness(i)->sequence);
    }
  }
  report.verdict = report.biconnected && report.arboreal && report.spans && report.disconnected;

  if (!report.biconnected) {
    report.failed_claim = Claim::Biconnected;
  } else {
    report.failed_claim = ev.failed_claim();
  }
  if (report.failed_claim) throw ClaimFailedError(*report.failed_claim, report);
  return report;
}

FaceId map_innermost_face(const PlaneGraph& g0, FaceId f, const PlaneGraph& gn) {
  const auto mapped = gn.find_face(g0.face(f).widened(gn.graph().edge_count()));
  if (!mapped) throw Error(ErrorCode::InvalidPlaneGraph, "face does not survive in the layered graph");
  return *mapped;
}

namespace {

// The edges form a simple path with exactly three edges.
bool is_three_edge_path(const Graph& g, const EdgeSet& edges) {
  if (edges.count() != 3) return false;
  std::vector<VertexId> verts;
  std::vector<int> deg;
  auto bump = [&](VertexId v) -> std::size_t {
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (verts[i] == v) {
        ++deg[i];
        return i;
      }
    }
    verts.push_back(v);
    deg.push_back(1);
    return verts.size() - 1;
  };
  UnionFind<std::size_t> uf(8);
  bool acyclic = true;
  edges.for_each([&](EdgeId e) {
    const auto a = bump(g.edge(e).u);
    const auto b = bump(g.edge(e).v);
    acyclic = uf.unite(a, b) && acyclic;
  });
  if (!acyclic || verts.size() != 4) return false;
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
}

}  // namespace

InductionReport arboreal_induction_check(std::size_t t, const Limits& limits,
                                         std::optional<std::pair<FaceId, FaceId>> g0_pair) {
  const PlaneGraph g0 = octahedron();
  if (!g0_pair) {
    const auto bindings = find_alpha_beta(g0, limits);
    g0_pair = std::pair{bindings.front().alpha, bindings.front().beta};
  }
  const LayeredOctahedron inner = layered_octahedron(t);
  const LayeredOctahedron outer = layered_octahedron(t + 1);
  const Graph& gi = inner.plane.graph();
  const Graph& go = outer.plane.graph();

  const CycleFamily family_inner =
      build_cycle_family(inner.plane, map_innermost_face(g0, g0_pair->first, inner.plane),
                         map_innermost_face(g0, g0_pair->second, inner.plane));
  const CycleFamily family_outer =
      build_cycle_family(outer.plane, map_innermost_face(g0, g0_pair->first, outer.plane),
                         map_innermost_face(g0, g0_pair->second, outer.plane));
  std::vector<EdgeSet> shell_faces;
  for (FaceId f : outer.outer_layer_faces) shell_faces.push_back(outer.plane.face(f));
  const CycleFamily shell(go, std::move(shell_faces));

  const BigInt expected = count_spanning_trees(go);
  if (expected > BigInt(limits.max_trees)) {
    throw Error(ErrorCode::TreeLimitExceeded,
                expected.str() + " spanning trees exceed the limit of " + std::to_string(limits.max_trees));
  }
  const auto trees = enumerate_spanning_trees(go, limits.max_trees);

  InductionReport report;
  report.t = t;
  report.alpha = g0_pair->first;
  report.beta = g0_pair->second;
  report.trees_scanned = trees.size();

  auto violate = [&](TreeId id, std::string reason) {
    if (report.violations++ == 0) {
      report.first_violation = id;
      report.first_violation_reason = std::move(reason);
    }
  };

  for (TreeId id = 0; id < trees.size(); ++id) {
    const SpanningTree& p = trees[id];
    const EdgeSet restricted = p.edges().truncated(gi.edge_count());
    EdgeSet shell_edges = p.edges();
    restricted.for_each([&](EdgeId e) { shell_edges.reset(e); });
    const bool restriction_spans = is_spanning_tree(gi, restricted);

    if (family_fundamental_cycles(go, p, shell).empty()) {
      ++report.outer_scope_trees;
      if (is_three_edge_path(go, shell_edges)) ++report.outer_scope_three_paths;
      if (!restriction_spans) {
        violate(id, "restriction to the inner layer is not a spanning tree");
      } else if (family_fundamental_cycles(gi, SpanningTree::unchecked(restricted), family_inner).empty()) {
        violate(id, "restriction has no fundamental cycle in the inner family");
      }
    }
    if (family_fundamental_cycles(go, p, family_outer).empty()) {
      ++report.full_scope_trees;
      if (!is_three_edge_path(go, shell_edges)) {
        violate(id, "shell edges do not form a three-edge path");
      } else if (!restriction_spans) {
        violate(id, "restriction to the inner layer is not a spanning tree");
      }
    }
  }
  return report;
}

}  // namespace cyclespan
