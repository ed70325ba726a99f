#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclespan/edge_set.hpp"
#include "cyclespan/graph.hpp"

namespace cyclespan {

using FaceId = std::uint32_t;

// A connected graph together with its face boundaries. Every face is a simple
// cycle, every edge lies on exactly two faces and the face count obeys Euler's
// formula; the internal faces (all but the outer one) form a basis of the
// cycle space.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  // Throws InvalidPlaneGraph when any of the invariants above fails.
  PlaneGraph(Graph g, std::vector<EdgeSet> faces, FaceId outer_face);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const EdgeSet> faces() const noexcept { return faces_; }
  const EdgeSet& face(FaceId f) const { return faces_[f]; }
  std::size_t face_count() const noexcept { return faces_.size(); }
  FaceId outer_face() const noexcept { return outer_; }

  std::vector<FaceId> internal_faces() const;
  // The two faces containing edge e, ascending.
  const std::array<FaceId, 2>& faces_of_edge(EdgeId e) const { return edge_faces_[e]; }
  std::optional<FaceId> find_face(const EdgeSet& s) const;
  // Every face (outer included) is a triangle.
  bool is_triangulation() const;

 private:
  Graph graph_;
  std::vector<EdgeSet> faces_;
  FaceId outer_ = 0;
  std::vector<std::array<FaceId, 2>> edge_faces_;
};

struct FacePair {
  FaceId phi;
  FaceId psi;

  friend bool operator==(const FacePair&, const FacePair&) = default;
};

// Plane octahedron: outer triangle 0,1,2; inner triangle 3,4,5 with 3~{0,1},
// 4~{1,2}, 5~{2,0}. Faces sorted by their sorted vertex triples.
PlaneGraph octahedron();

struct LayeredOctahedron {
  PlaneGraph plane;
  std::size_t layers = 0;
  // Internal faces of the innermost octahedron copy, ascending face ids.
  std::vector<FaceId> innermost_faces;
  // Faces added by the last layer (empty for layers == 0), ascending face ids.
  std::vector<FaceId> outer_layer_faces;
  // Vertex count of the graph one layer down (equal to the full count when
  // layers == 0). The smaller graph's vertices and edges are id prefixes.
  std::size_t inner_vertex_count = 0;
  std::size_t inner_edge_count = 0;
};

// G_n: the octahedron wrapped in n further octahedral shells. Shell t+1 adds
// a triangle x',y',z' outside the current outer triangle x,y,z with
// x'~{x,y}, y'~{y,z}, z'~{z,x}. 3(n+2) vertices, 9n+12 edges, all faces
// triangles; the outer face is the last shell's triangle.
LayeredOctahedron layered_octahedron(std::size_t n);

// Faces strictly inside the cycle sigma: flood the dual from the outer face
// without crossing sigma; whatever is not reached is inside. Ascending ids.
// Throws NotACycle.
std::vector<FaceId> interior_faces(const PlaneGraph& pg, const EdgeSet& sigma);

// Edges off sigma, with both endpoints on sigma, lying between two interior
// faces of sigma. Throws NotACycle.
EdgeSet diagonal_edges(const PlaneGraph& pg, const EdgeSet& sigma);

// Two distinct interior faces of sigma, each sharing an edge with sigma, whose
// symmetric difference with sigma is again a cycle; the two smallest such ids.
// Throws NotACycle, KTooSmall (fewer than two interior faces), NotTriangulated.
FacePair lemma_two_faces(const PlaneGraph& pg, const EdgeSet& sigma);

// The faces alpha, beta that define a family of the form
// "internal faces with alpha replaced by alpha xor beta". Throws NotInFamilyForm.
struct ReplacedFace {
  FaceId alpha;
  FaceId beta;
};
ReplacedFace recognize_replaced_face_family(const PlaneGraph& pg, std::span<const EdgeSet> family);

// Members tau_1..tau_m of `family` whose running symmetric difference is a
// cycle at every step and equals sigma at the end. Recurses on the number of
// interior faces: peel off the smallest-id interior face phi != alpha for
// which sigma xor phi is a cycle; a lone face alpha becomes
// (alpha xor beta), beta. Throws NotACycle, NotInFamilyForm, NotTriangulated.
std::vector<EdgeSet> cyclic_face_decomposition(const PlaneGraph& pg,
                                               std::span<const EdgeSet> family,
                                               const EdgeSet& sigma);

}  // namespace cyclespan
