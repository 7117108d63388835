#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mondef/error.hpp"
#include "mondef/vertex_set.hpp"

namespace mondef {

// Limit on backtracking searches over facet orders (shellings, tree
// shellings).  Overridable per call; the CLI exposes --max-facets.
inline constexpr int kDefaultMaxFacets = 12;

// A simplicial complex on the vertex set [n], held by its facet list.
// Every vertex must lie in some facet, facets form an antichain, and the
// facet list is kept in lex order on sorted vertex lists.  Immutable.
class SimplicialComplex {
public:
  static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);
  static SimplicialComplex from_facet_sets(int n, std::vector<VertexSet> facets);

  int vertex_count() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  int dimension() const;  // max |F| - 1
  bool is_pure() const;
  bool is_simplex() const { return facets_.size() == 1 && facets_[0] == VertexSet::full(n_); }
  bool is_face(VertexSet s) const;

  // All faces including the empty face, sorted by (cardinality, lex).
  std::vector<VertexSet> all_faces() const;
  // Inclusion-minimal non-faces, sorted by (cardinality, lex).  Candidates
  // are grown from faces one vertex at a time, so sizes never exceed dim+2.
  std::vector<VertexSet> minimal_nonfaces() const;
  // Face counts (f_{-1}=1, f_0, ..., f_dim).
  std::vector<long long> f_vector() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  SimplicialComplex(int n, std::vector<VertexSet> facets)
      : n_(n), facets_(std::move(facets)) {}

  int n_ = 0;
  std::vector<VertexSet> facets_;
};

// A simple graph on [n]: no loops, no duplicate edges.
class Graph {
public:
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  VertexSet neighbors(int v) const { return adj_[v - 1]; }
  bool adjacent(int u, int v) const { return adj_[u - 1].contains(v); }

private:
  Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<VertexSet> adj)
      : n_(n), edges_(std::move(edges)), adj_(std::move(adj)) {}

  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<VertexSet> adj_;
};

// The subcomplex induced on W, re-indexed to [|W|].  original_labels[i]
// is the vertex of the parent complex that new vertex i+1 stands for.
struct InducedSubcomplex {
  SimplicialComplex complex;
  std::vector<int> original_labels;
};
InducedSubcomplex induced_subcomplex(const SimplicialComplex& k, VertexSet w);

Graph one_skeleton(const SimplicialComplex& k);

// Lexicographically least shelling order, or nullopt if none exists.
// Requires a pure complex; facet counts above the bound are refused.
std::optional<std::vector<VertexSet>> find_shelling(const SimplicialComplex& k,
                                                    int max_facets = kDefaultMaxFacets);

// Circuit-elimination axiom over the minimal non-faces.
bool is_matroid(const SimplicialComplex& k);

// Exchange condition checked on every face.
bool is_shifted(const SimplicialComplex& k);
// For every face s with |s| = t, s union [d-t] is again a face (d = dim+1).
bool shifted_pure_criterion(const SimplicialComplex& k);

// Perfect-elimination-ordering search (repeatedly remove a simplicial vertex).
bool is_chordal(const Graph& g);

// Complex of all cliques of g; isolated vertices become singleton facets.
SimplicialComplex clique_complex(const Graph& g);
// True iff every minimal non-face has exactly two vertices.
bool is_clique_complex(const SimplicialComplex& k);

// Nodes are the facets of a pure complex in canonical order; edges join
// facets sharing all but one vertex.
struct FacetGraph {
  std::vector<VertexSet> facets;
  std::vector<std::pair<int, int>> edges;  // index pairs, i < j
};
FacetGraph facet_graph(const SimplicialComplex& k);

// A shelling in which every facet after the first introduces a vertex not
// seen before.  introduced[i] is the vertex brought in by order[i+1].
struct TreeShelling {
  std::vector<VertexSet> order;
  std::vector<int> introduced;
};
// Lexicographically least tree shelling, or nullopt (non-pure complexes
// never qualify).
std::optional<TreeShelling> find_tree_shelling(const SimplicialComplex& k,
                                               int max_facets = kDefaultMaxFacets);

// Spanning tree of the facet graph built over the canonical tree shelling:
// each facet joins the earliest prior facet sharing all but one vertex.
// Facets listed in shelling order.  The induced-subtree property is
// asserted on the result.
struct CliqueTree {
  std::vector<VertexSet> facets;
  std::vector<std::pair<int, int>> edges;  // index pairs, i < j
};
CliqueTree clique_tree(const SimplicialComplex& k, int max_facets = kDefaultMaxFacets);

}  // namespace mondef
