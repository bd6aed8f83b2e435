// Exact clique machinery on circle graphs: maximum t-intersecting
// families, complete enumeration of maximum intersecting families, and
// classification of the extremal families.  The solver is a
// branch-and-bound with greedy colouring bounds over bit rows; budgets
// make exhaustion explicit instead of silent.
#pragma once

#include <string>

#include "benz/geometry.hpp"

namespace benz {

// Undirected graph on {0..n-1} with bit-row adjacency.
struct BitGraph {
  int n = 0;
  std::vector<Bitrow> adj;

  explicit BitGraph(int n = 0) : n(n), adj(n, Bitrow(n)) {}
  void add_edge(int u, int v) {
    adj[u].set(v);
    adj[v].set(u);
  }
  int degree(int v) const { return adj[v].count(); }
  BitGraph complement() const;
};

// Circles adjacent when they meet in at least t points.
BitGraph agreement_graph(const CircleGeometry& g, int t);

struct SearchBudget {
  long long node_limit = 100000000;  // branch-and-bound nodes
  long long wall_ms = 900000;
  int initial_lower = 0;  // size of a clique known to exist
  int threads = 1;
};

enum class FamilyLabel { pencil, nucleus, other };

struct Classification {
  FamilyLabel label = FamilyLabel::other;
  int id = -1;  // point id for pencil, nucleus id for nucleus
};

std::string label_name(const Classification& c);

// pencil(P) when every circle passes through P and the family exhausts
// the circles through P; nucleus(N) when the geometry is an even order
// Laguerre plane and the family is all q^2 circles with nucleus N.
Classification classify_family(const CircleGeometry& g, const std::vector<int>& circles);

struct FamilyWitness {
  std::vector<int> circles;  // sorted ascending
  int size = 0;
  bool optimal = false;  // certified, not just best found in budget
  Classification cls;
  long long nodes = 0;
  long long elapsed_ms = 0;
};

// Exact maximum clique.  rooted asserts vertex transitivity, so the
// search may fix vertex 0 into the clique.  The witness is always the
// lexicographically first optimum, independent of thread count; when the
// budget runs out the best clique found so far comes back with
// optimal = false.
FamilyWitness max_clique(const BitGraph& g, const SearchBudget& b, bool rooted = false);

struct EnumerationResult {
  std::vector<FamilyWitness> families;  // sorted by circle list
  bool complete = false;
  long long nodes = 0;
  long long elapsed_ms = 0;
};

// Every clique of exactly the given size, meant to be called with the
// certified maximum.  No symmetry reduction: all witnesses, not orbit
// representatives.
EnumerationResult cliques_of_size(const BitGraph& g, int size, const SearchBudget& b);

// Maximum family of circles pairwise meeting in at least t points.
// Pencils (t = 1) and two-point pencils (t = 2) seed the incumbent.
FamilyWitness max_t_intersecting(const CircleGeometry& g, int t, const SearchBudget& b = {});

struct ProvenMax {
  int size = 0;
  bool certified = false;
  std::string certificate;  // how the size was established
};

// Size of a maximum intersecting family together with its proof: the
// ratio bound when the geometry (or its nucleus extension) carries a
// scheme and a pencil meets the bound, otherwise certified search.
ProvenMax proven_max_intersecting(const CircleGeometry& g, const SearchBudget& b = {});

// All maximum intersecting families, classified.  known_size must be the
// proven maximum.
EnumerationResult enumerate_maximum_intersecting(const CircleGeometry& g, int known_size,
                                                 const SearchBudget& b = {});

}  // namespace benz
