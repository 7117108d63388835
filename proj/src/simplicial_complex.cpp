#include "mondef/simplicial_complex.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace mondef {

namespace {

// (cardinality, lex) — the display order for face lists.
bool face_order(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return VertexSet::lex_less(a, b);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<VertexSet> sets;
  sets.reserve(facets.size());
  for (const auto& f : facets) sets.push_back(VertexSet::of(f));
  return from_facet_sets(n, std::move(sets));
}

SimplicialComplex SimplicialComplex::from_facet_sets(int n, std::vector<VertexSet> facets) {
  if (n < 1 || n > 32)
    fail(ErrorCode::InvalidArgument, "vertex count must be in 1..32, got " + std::to_string(n));
  if (facets.empty()) fail(ErrorCode::EmptyInput, "a complex needs at least one facet");
  for (VertexSet f : facets) {
    if (f.empty()) fail(ErrorCode::EmptyInput, "empty facet");
    if (!f.subset_of(VertexSet::full(n)))
      fail(ErrorCode::VertexOutOfRange,
           "facet vertex exceeds the vertex count " + std::to_string(n));
  }

  // Reduce to the inclusion-maximal antichain before checking coverage.
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<VertexSet> maximal;
  for (VertexSet f : facets) {
    bool dominated = false;
    for (VertexSet g : facets)
      if (g != f && f.subset_of(g)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(f);
  }

  VertexSet covered;
  for (VertexSet f : maximal) covered = covered | f;
  if (covered != VertexSet::full(n))
    for (int v = 1; v <= n; ++v)
      if (!covered.contains(v))
        fail(ErrorCode::UncoveredVertex, "vertex " + std::to_string(v) + " lies in no facet");

  std::sort(maximal.begin(), maximal.end(), VertexSet::lex_less);
  return SimplicialComplex(n, std::move(maximal));
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  for (VertexSet f : facets_)
    if (f.size() != facets_[0].size()) return false;
  return true;
}

bool SimplicialComplex::is_face(VertexSet s) const {
  for (VertexSet f : facets_)
    if (s.subset_of(f)) return true;
  return false;
}

std::vector<VertexSet> SimplicialComplex::all_faces() const {
  std::vector<std::uint32_t> masks;
  for (VertexSet f : facets_) {
    const std::uint32_t m = f.mask();
    std::uint32_t sub = m;
    while (true) {
      masks.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<VertexSet> faces;
  faces.reserve(masks.size());
  for (std::uint32_t m : masks) faces.push_back(VertexSet(m));
  std::sort(faces.begin(), faces.end(), face_order);
  return faces;
}

std::vector<VertexSet> SimplicialComplex::minimal_nonfaces() const {
  const std::vector<VertexSet> faces = all_faces();
  std::vector<VertexSet> candidates;
  for (VertexSet f : faces)
    for (int v = 1; v <= n_; ++v) {
      if (f.contains(v)) continue;
      const VertexSet c = f.with(v);
      if (!is_face(c)) candidates.push_back(c);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<VertexSet> minimal;
  for (VertexSet c : candidates) {
    bool all_subfaces = true;
    for (int v : c)
      if (!is_face(c.without(v))) {
        all_subfaces = false;
        break;
      }
    if (all_subfaces) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), face_order);
  return minimal;
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> f(dimension() + 2, 0);
  for (VertexSet face : all_faces()) ++f[face.size()];
  return f;
}

InducedSubcomplex induced_subcomplex(const SimplicialComplex& k, VertexSet w) {
  if (w.empty()) fail(ErrorCode::EmptyVertexSet, "induced subcomplex over the empty vertex set");
  if (!w.subset_of(VertexSet::full(k.vertex_count())))
    fail(ErrorCode::VertexOutOfRange, "vertex subset exceeds the vertex count");

  std::vector<VertexSet> slices;
  for (VertexSet f : k.facets()) {
    const VertexSet s = f & w;
    if (!s.empty()) slices.push_back(s);
  }

  // Re-index: the i-th smallest element of w becomes vertex i+1.
  const std::vector<int> labels = w.vertices();
  std::vector<int> new_of(33, 0);
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) new_of[labels[i]] = i + 1;
  std::vector<VertexSet> relabeled;
  relabeled.reserve(slices.size());
  for (VertexSet s : slices) {
    VertexSet r;
    for (int v : s) r = r.with(new_of[v]);
    relabeled.push_back(r);
  }
  return {SimplicialComplex::from_facet_sets(w.size(), std::move(relabeled)), labels};
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > 32)
    fail(ErrorCode::InvalidArgument, "vertex count must be in 1..32, got " + std::to_string(n));
  std::vector<std::pair<int, int>> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      fail(ErrorCode::VertexOutOfRange, "edge endpoint out of range");
    if (u == v) fail(ErrorCode::InvalidEdge, "loop at vertex " + std::to_string(u));
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::vector<VertexSet> adj(n);
  for (auto [u, v] : canon) {
    adj[u - 1] = adj[u - 1].with(v);
    adj[v - 1] = adj[v - 1].with(u);
  }
  return Graph(n, std::move(canon), std::move(adj));
}

Graph one_skeleton(const SimplicialComplex& k) {
  std::vector<std::pair<int, int>> edges;
  for (VertexSet f : k.facets())
    for (int u : f)
      for (int v : f)
        if (u < v) edges.emplace_back(u, v);
  return Graph::from_edges(k.vertex_count(), edges);
}

namespace {

// Shelling condition for appending f after the facets in `chosen`: the
// intersection with the union of prior facets must be pure of dimension
// |f|-2, i.e. every prior intersection sits inside one of full size |f|-1.
bool shelling_step_ok(const std::vector<VertexSet>& facets,
                      const std::vector<int>& chosen, VertexSet f) {
  for (int gi : chosen) {
    const VertexSet meet = facets[gi] & f;
    bool covered = false;
    for (int hi : chosen) {
      const VertexSet big = facets[hi] & f;
      if (big.size() == f.size() - 1 && meet.subset_of(big)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

// Depth-first search over facet orders, trying facets in canonical order so
// the first completed order is the lexicographically least.  `dead` caches
// chosen-sets that cannot be completed; whether an extension is admissible
// depends only on the set of facets already placed.
bool order_search(const std::vector<VertexSet>& facets, bool require_new_vertex,
                  std::vector<int>& chosen, std::uint32_t used, VertexSet covered,
                  std::unordered_set<std::uint32_t>& dead,
                  std::vector<int>* introduced) {
  const int t = static_cast<int>(facets.size());
  if (static_cast<int>(chosen.size()) == t) return true;
  if (dead.contains(used)) return false;
  for (int i = 0; i < t; ++i) {
    if (used & (std::uint32_t{1} << i)) continue;
    const VertexSet f = facets[i];
    if (!chosen.empty()) {
      const VertexSet fresh = f - covered;
      if (require_new_vertex && fresh.empty()) continue;
      if (!shelling_step_ok(facets, chosen, f)) continue;
      if (introduced) introduced->push_back(fresh.min_vertex());
    }
    chosen.push_back(i);
    if (order_search(facets, require_new_vertex, chosen, used | (std::uint32_t{1} << i),
                     covered | f, dead, introduced))
      return true;
    chosen.pop_back();
    if (introduced && !chosen.empty()) introduced->pop_back();
  }
  dead.insert(used);
  return false;
}

}  // namespace

std::optional<std::vector<VertexSet>> find_shelling(const SimplicialComplex& k, int max_facets) {
  if (!k.is_pure()) fail(ErrorCode::NotPure, "shellability is defined for pure complexes");
  if (k.facet_count() > max_facets)
    fail(ErrorCode::TooLarge, "facet count " + std::to_string(k.facet_count()) +
                                  " exceeds the search bound " + std::to_string(max_facets));
  std::vector<int> chosen;
  std::unordered_set<std::uint32_t> dead;
  if (!order_search(k.facets(), false, chosen, 0, VertexSet(), dead, nullptr))
    return std::nullopt;
  std::vector<VertexSet> order;
  order.reserve(chosen.size());
  for (int i : chosen) order.push_back(k.facets()[i]);
  return order;
}

std::optional<TreeShelling> find_tree_shelling(const SimplicialComplex& k, int max_facets) {
  if (!k.is_pure()) return std::nullopt;
  // In a tree shelling every facet after the first introduces exactly one
  // vertex, so the facet count is pinned to n-d+1.
  const int d = k.dimension() + 1;
  if (k.facet_count() != k.vertex_count() - d + 1) return std::nullopt;
  if (k.facet_count() > max_facets)
    fail(ErrorCode::TooLarge, "facet count " + std::to_string(k.facet_count()) +
                                  " exceeds the search bound " + std::to_string(max_facets));
  std::vector<int> chosen;
  std::vector<int> introduced;
  std::unordered_set<std::uint32_t> dead;
  if (!order_search(k.facets(), true, chosen, 0, VertexSet(), dead, &introduced))
    return std::nullopt;
  TreeShelling result;
  result.order.reserve(chosen.size());
  for (int i : chosen) result.order.push_back(k.facets()[i]);
  result.introduced = std::move(introduced);
  return result;
}

bool is_matroid(const SimplicialComplex& k) {
  const std::vector<VertexSet> circuits = k.minimal_nonfaces();
  const int c = static_cast<int>(circuits.size());
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b) {
      const VertexSet both = circuits[a] & circuits[b];
      const VertexSet all = circuits[a] | circuits[b];
      for (int i : both) {
        const VertexSet target = all.without(i);
        bool eliminated = false;
        for (VertexSet g : circuits)
          if (g.subset_of(target)) {
            eliminated = true;
            break;
          }
        if (!eliminated) return false;
      }
    }
  return true;
}

bool is_shifted(const SimplicialComplex& k) {
  for (VertexSet face : k.all_faces())
    for (int j : face)
      for (int i = 1; i < j; ++i) {
        if (face.contains(i)) continue;
        if (!k.is_face(face.without(j).with(i))) return false;
      }
  return true;
}

bool shifted_pure_criterion(const SimplicialComplex& k) {
  const int d = k.dimension() + 1;
  for (VertexSet face : k.all_faces()) {
    const int t = face.size();
    if (!k.is_face(face | VertexSet::full(d - t))) return false;
  }
  return true;
}

bool is_chordal(const Graph& g) {
  VertexSet remaining = VertexSet::full(g.vertex_count());
  while (!remaining.empty()) {
    bool removed = false;
    for (int v : remaining) {
      const VertexSet nb = g.neighbors(v) & remaining;
      bool simplicial = true;
      for (int u : nb)
        if (!nb.without(u).subset_of(g.neighbors(u))) {
          simplicial = false;
          break;
        }
      if (simplicial) {
        remaining = remaining.without(v);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

SimplicialComplex clique_complex(const Graph& g) {
  const int n = g.vertex_count();
  // Grow cliques one vertex at a time (always past the current maximum),
  // then keep the inclusion-maximal ones.
  std::vector<VertexSet> cliques;
  std::vector<VertexSet> layer;
  for (int v = 1; v <= n; ++v) layer.push_back(VertexSet::single(v));
  while (!layer.empty()) {
    cliques.insert(cliques.end(), layer.begin(), layer.end());
    std::vector<VertexSet> next;
    for (VertexSet c : layer)
      for (int w = c.max_vertex() + 1; w <= n; ++w)
        if (c.subset_of(g.neighbors(w))) next.push_back(c.with(w));
    layer = std::move(next);
  }
  std::vector<VertexSet> maximal;
  for (VertexSet c : cliques) {
    bool extendable = false;
    for (int w = 1; w <= n && !extendable; ++w)
      extendable = !c.contains(w) && c.subset_of(g.neighbors(w));
    if (!extendable) maximal.push_back(c);
  }
  return SimplicialComplex::from_facet_sets(n, std::move(maximal));
}

bool is_clique_complex(const SimplicialComplex& k) {
  for (VertexSet m : k.minimal_nonfaces())
    if (m.size() != 2) return false;
  return true;
}

FacetGraph facet_graph(const SimplicialComplex& k) {
  if (!k.is_pure()) fail(ErrorCode::NotPure, "the facet graph is defined for pure complexes");
  FacetGraph fg;
  fg.facets = k.facets();
  const int t = static_cast<int>(fg.facets.size());
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if ((fg.facets[i] & fg.facets[j]).size() == fg.facets[i].size() - 1)
        fg.edges.emplace_back(i, j);
  return fg;
}

CliqueTree clique_tree(const SimplicialComplex& k, int max_facets) {
  const auto shelling = find_tree_shelling(k, max_facets);
  if (!shelling) fail(ErrorCode::NotTreeComplex, "clique trees require a tree complex");
  const std::vector<VertexSet>& order = shelling->order;

  CliqueTree tree;
  tree.facets = order;
  for (int i = 1; i < static_cast<int>(order.size()); ++i) {
    int parent = -1;
    for (int j = 0; j < i; ++j)
      if ((order[j] & order[i]).size() == order[i].size() - 1) {
        parent = j;
        break;
      }
    if (parent < 0)
      fail(ErrorCode::InternalAssertion, "tree shelling step without a full-size prior overlap");
    tree.edges.emplace_back(parent, i);
  }

  // Facets containing any fixed vertex must induce a connected subtree;
  // in a tree that is exactly the edge count |S|-1.
  for (int v = 1; v <= k.vertex_count(); ++v) {
    int nodes = 0, inner = 0;
    for (VertexSet f : order) nodes += f.contains(v) ? 1 : 0;
    for (auto [a, b] : tree.edges)
      inner += (order[a].contains(v) && order[b].contains(v)) ? 1 : 0;
    if (nodes > 0 && inner != nodes - 1)
      fail(ErrorCode::CliqueTreePropertyViolated,
           "facets containing vertex " + std::to_string(v) + " do not induce a subtree");
  }
  return tree;
}

}  // namespace mondef
