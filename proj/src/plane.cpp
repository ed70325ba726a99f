#include "cyclespan/plane.hpp"

#include <algorithm>
#include <string>

#include "cyclespan/cycles.hpp"
#include "cyclespan/error.hpp"

namespace cyclespan {

namespace {

constexpr FaceId kNoFace = static_cast<FaceId>(-1);

void require_cycle(const PlaneGraph& pg, const EdgeSet& sigma) {
  if (!is_cycle(pg.graph(), sigma)) {
    throw Error(ErrorCode::NotACycle, "edge set is not a simple cycle of the plane graph");
  }
}

// Builds a plane graph from triangles given as vertex triples, sorting the
// faces by their sorted triples.
PlaneGraph from_triangles(Graph g, std::vector<std::array<VertexId, 3>> triangles,
                          std::array<VertexId, 3> outer) {
  for (auto& t : triangles) std::sort(t.begin(), t.end());
  std::sort(outer.begin(), outer.end());
  std::sort(triangles.begin(), triangles.end());
  std::vector<EdgeSet> faces;
  FaceId outer_id = kNoFace;
  for (const auto& t : triangles) {
    if (t == outer) outer_id = static_cast<FaceId>(faces.size());
    EdgeSet f = g.empty_set();
    for (int i = 0; i < 3; ++i) {
      auto e = g.find_edge(t[i], t[(i + 1) % 3]);
      if (!e) throw Error(ErrorCode::InvalidPlaneGraph, "triangle side missing");
      f.set(*e);
    }
    faces.push_back(f);
  }
  return PlaneGraph(std::move(g), std::move(faces), outer_id);
}

}  // namespace

PlaneGraph::PlaneGraph(Graph g, std::vector<EdgeSet> faces, FaceId outer_face)
    : graph_(std::move(g)), faces_(std::move(faces)), outer_(outer_face) {
  const std::size_t n = graph_.vertex_count();
  const std::size_t m = graph_.edge_count();
  if (!is_connected(graph_)) throw Error(ErrorCode::InvalidPlaneGraph, "graph is disconnected");
  if (faces_.size() + n != m + 2) {
    throw Error(ErrorCode::InvalidPlaneGraph,
                std::to_string(faces_.size()) + " faces, Euler requires " +
                    std::to_string(m + 2 - n));
  }
  if (outer_ >= faces_.size()) throw Error(ErrorCode::InvalidPlaneGraph, "outer face id out of range");

  edge_faces_.assign(m, {kNoFace, kNoFace});
  for (FaceId f = 0; f < faces_.size(); ++f) {
    if (!is_cycle(graph_, faces_[f])) {
      throw Error(ErrorCode::InvalidPlaneGraph, "face " + std::to_string(f) + " is not a cycle");
    }
    bool ok = true;
    faces_[f].for_each([&](EdgeId e) {
      auto& slot = edge_faces_[e];
      if (slot[0] == kNoFace) {
        slot[0] = f;
      } else if (slot[1] == kNoFace) {
        slot[1] = f;
      } else {
        ok = false;
      }
    });
    if (!ok) throw Error(ErrorCode::InvalidPlaneGraph, "edge on more than two faces");
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (edge_faces_[e][1] == kNoFace) {
      throw Error(ErrorCode::InvalidPlaneGraph, "edge " + std::to_string(e) + " on fewer than two faces");
    }
  }
  std::vector<EdgeSet> internal;
  for (FaceId f : internal_faces()) internal.push_back(faces_[f]);
  if (gf2_rank(internal) + n != m + 1) {
    throw Error(ErrorCode::InvalidPlaneGraph, "internal faces do not span the cycle space");
  }
}

std::vector<FaceId> PlaneGraph::internal_faces() const {
  std::vector<FaceId> out;
  for (FaceId f = 0; f < faces_.size(); ++f) {
    if (f != outer_) out.push_back(f);
  }
  return out;
}

std::optional<FaceId> PlaneGraph::find_face(const EdgeSet& s) const {
  for (FaceId f = 0; f < faces_.size(); ++f) {
    if (faces_[f] == s) return f;
  }
  return std::nullopt;
}

bool PlaneGraph::is_triangulation() const {
  return std::all_of(faces_.begin(), faces_.end(), [](const EdgeSet& f) { return f.count() == 3; });
}

PlaneGraph octahedron() { return layered_octahedron(0).plane; }

LayeredOctahedron layered_octahedron(std::size_t n) {
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                             {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}};
  std::vector<std::array<VertexId, 3>> triangles = {{3, 4, 5}, {0, 1, 3}, {1, 2, 4}, {2, 0, 5},
                                                    {3, 4, 1}, {4, 5, 2}, {5, 3, 0}};
  const std::vector<std::array<VertexId, 3>> innermost = triangles;
  std::array<VertexId, 3> outer = {0, 1, 2};
  std::vector<std::array<VertexId, 3>> last_layer;
  std::size_t vertex_count = 6;
  std::size_t inner_vertices = 6;
  std::size_t inner_edges = edges.size();

  for (std::size_t t = 0; t < n; ++t) {
    inner_vertices = vertex_count;
    inner_edges = edges.size();
    const auto [x, y, z] = outer;
    const auto a = static_cast<VertexId>(vertex_count);
    const VertexId b = a + 1;
    const VertexId c = a + 2;
    edges.insert(edges.end(),
                 {{a, b}, {b, c}, {c, a}, {a, x}, {a, y}, {b, y}, {b, z}, {c, z}, {c, x}});
    last_layer = {{a, x, y}, {a, y, b}, {b, y, z}, {b, z, c}, {c, z, x}, {c, x, a}};
    triangles.insert(triangles.end(), last_layer.begin(), last_layer.end());
    outer = {a, b, c};
    vertex_count += 3;
  }
  triangles.push_back(outer);

  LayeredOctahedron out;
  out.layers = n;
  out.inner_vertex_count = inner_vertices;
  out.inner_edge_count = inner_edges;
  out.plane = from_triangles(Graph(vertex_count, std::move(edges)), triangles, outer);

  auto face_of = [&](std::array<VertexId, 3> t) {
    EdgeSet f = out.plane.graph().empty_set();
    for (int i = 0; i < 3; ++i) f.set(*out.plane.graph().find_edge(t[i], t[(i + 1) % 3]));
    return *out.plane.find_face(f);
  };
  for (const auto& t : innermost) out.innermost_faces.push_back(face_of(t));
  for (const auto& t : last_layer) out.outer_layer_faces.push_back(face_of(t));
  std::sort(out.innermost_faces.begin(), out.innermost_faces.end());
  std::sort(out.outer_layer_faces.begin(), out.outer_layer_faces.end());
  return out;
}

std::vector<FaceId> interior_faces(const PlaneGraph& pg, const EdgeSet& sigma) {
  require_cycle(pg, sigma);
  std::vector<char> outside(pg.face_count(), 0);
  std::vector<FaceId> stack{pg.outer_face()};
  outside[pg.outer_face()] = 1;
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    pg.face(f).for_each([&](EdgeId e) {
      if (sigma.test(e)) return;
      const auto& pair = pg.faces_of_edge(e);
      FaceId other = pair[0] == f ? pair[1] : pair[0];
      if (!outside[other]) {
        outside[other] = 1;
        stack.push_back(other);
      }
    });
  }
  std::vector<FaceId> inside;
  for (FaceId f = 0; f < pg.face_count(); ++f) {
    if (!outside[f]) inside.push_back(f);
  }
  return inside;
}

EdgeSet diagonal_edges(const PlaneGraph& pg, const EdgeSet& sigma) {
  const std::vector<FaceId> inside = interior_faces(pg, sigma);
  std::vector<char> is_inside(pg.face_count(), 0);
  for (FaceId f : inside) is_inside[f] = 1;
  std::vector<char> on_sigma(pg.graph().vertex_count(), 0);
  for (VertexId v : touched_vertices(pg.graph(), sigma)) on_sigma[v] = 1;

  EdgeSet out = pg.graph().empty_set();
  for (EdgeId e = 0; e < pg.graph().edge_count(); ++e) {
    if (sigma.test(e)) continue;
    const Edge& ed = pg.graph().edge(e);
    const auto& pair = pg.faces_of_edge(e);
    if (on_sigma[ed.u] && on_sigma[ed.v] && is_inside[pair[0]] && is_inside[pair[1]]) out.set(e);
  }
  return out;
}

FacePair lemma_two_faces(const PlaneGraph& pg, const EdgeSet& sigma) {
  if (!pg.is_triangulation()) throw Error(ErrorCode::NotTriangulated, "plane graph has a non-triangular face");
  const std::vector<FaceId> inside = interior_faces(pg, sigma);
  if (inside.size() < 2) {
    throw Error(ErrorCode::KTooSmall, "cycle encloses " + std::to_string(inside.size()) + " face(s)");
  }
  std::vector<FaceId> found;
  for (FaceId f : inside) {
    if (pg.face(f).intersects(sigma) && is_cycle(pg.graph(), sigma ^ pg.face(f))) {
      found.push_back(f);
      if (found.size() == 2) return {found[0], found[1]};
    }
  }
  throw Error(ErrorCode::ClaimFailed, "fewer than two interior faces can be split off the cycle");
}

ReplacedFace recognize_replaced_face_family(const PlaneGraph& pg, std::span<const EdgeSet> family) {
  const std::vector<FaceId> internal = pg.internal_faces();
  if (family.size() != internal.size()) {
    throw Error(ErrorCode::NotInFamilyForm, "family size " + std::to_string(family.size()) +
                                                " differs from internal face count " +
                                                std::to_string(internal.size()));
  }
  std::vector<char> present(pg.face_count(), 0);
  std::optional<EdgeSet> replacement;
  for (const EdgeSet& c : family) {
    if (c.capacity() != pg.graph().edge_count()) {
      throw Error(ErrorCode::NotInFamilyForm, "family member sized for another graph");
    }
    auto f = pg.find_face(c);
    if (f && *f != pg.outer_face()) {
      if (present[*f]) throw Error(ErrorCode::NotInFamilyForm, "duplicate face in family");
      present[*f] = 1;
    } else if (!replacement) {
      replacement = c;
    } else {
      throw Error(ErrorCode::NotInFamilyForm, "more than one non-face member");
    }
  }
  if (!replacement) throw Error(ErrorCode::NotInFamilyForm, "no replaced face");
  std::optional<FaceId> alpha;
  for (FaceId f : internal) {
    if (!present[f]) alpha = f;
  }
  if (!alpha) throw Error(ErrorCode::NotInFamilyForm, "no internal face is missing");
  auto beta = pg.find_face(*replacement ^ pg.face(*alpha));
  if (!beta || *beta == pg.outer_face() || !present[*beta] ||
      (pg.face(*alpha) & pg.face(*beta)).count() != 1) {
    throw Error(ErrorCode::NotInFamilyForm, "replacement is not alpha xor an adjacent face");
  }
  return {*alpha, *beta};
}

std::vector<EdgeSet> cyclic_face_decomposition(const PlaneGraph& pg, std::span<const EdgeSet> family,
                                               const EdgeSet& sigma) {
  if (!pg.is_triangulation()) throw Error(ErrorCode::NotTriangulated, "plane graph has a non-triangular face");
  const ReplacedFace rf = recognize_replaced_face_family(pg, family);
  require_cycle(pg, sigma);

  // Faces peeled off, outermost first; reversed at the end.
  std::vector<EdgeSet> peeled;
  EdgeSet current = sigma;
  while (true) {
    const std::vector<FaceId> inside = interior_faces(pg, current);
    if (inside.size() == 1) {
      if (inside.front() == rf.alpha) {
        peeled.push_back(pg.face(rf.beta));
        peeled.push_back(pg.face(rf.alpha) ^ pg.face(rf.beta));
      } else {
        peeled.push_back(current);
      }
      break;
    }
    std::optional<FaceId> phi;
    for (FaceId f : inside) {
      if (f != rf.alpha && pg.face(f).intersects(current) &&
          is_cycle(pg.graph(), current ^ pg.face(f))) {
        phi = f;
        break;
      }
    }
    if (!phi) throw Error(ErrorCode::ClaimFailed, "no interior face other than alpha splits off");
    peeled.push_back(pg.face(*phi));
    current ^= pg.face(*phi);
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

}  // namespace cyclespan
