#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alcove/matroid.hpp"
#include "alcove/polynomial.hpp"

namespace alcove {

using Edge = std::pair<int, int>;

// Normalizes to (min, max).
Edge make_edge(int a, int b);

/// Edges drawn as chords of a circle labeled 1..n clockwise cross (touching
/// counts) iff the 2-subsets are a sorted pair in some order.
bool edges_cross(Edge e1, Edge e2, int n);

/// A graph on [n] whose edges pairwise cross. Edges are normalized and sorted.
struct Thrackle {
  int n = 0;
  std::vector<Edge> edges;

  Thrackle() = default;
  Thrackle(int n_, std::vector<Edge> edges_);

  std::vector<int> degrees() const;
  // Vertices of degree at least two: the odd cycle of a maximal thrackle.
  std::vector<int> cycle_vertices() const;
  bool has_edge(Edge e) const;
  std::string to_string() const;

  auto operator<=>(const Thrackle&) const = default;
};

/// Vertices v_1 < ... < v_{2k+1}; the cycle joins v_i to v_{i+k+1}.
struct OddCycle {
  std::vector<int> vertices;

  explicit OddCycle(std::vector<int> vs);
  int half() const { return static_cast<int>(vertices.size() / 2); }
  std::vector<Edge> edges() const;
};

/// G(C): the cycle plus, for each vertex u off the cycle, the chord to the
/// cycle vertex opposite u. Throws InvalidCycleError when some part holds
/// more than k cycle vertices (|C| = 2k + 1).
Thrackle thrackle_from_cycle(const OddCycle& c, const WeightedSetPartition& p);

// All G(C), ordered by cycle vertex set. Requires b = 0, c = 1.
std::vector<Thrackle> enumerate_maximal_thrackles(const WeightedSetPartition& p);

Int volume_by_odd_cycles(const WeightedSetPartition& p);
Int volume_by_complement(const WeightedSetPartition& p);

/// Replaces (a, b) by (a-1, b+1) when (a-1, b) and (b+1, a) are edges,
/// a-1, a, b, b+1 are distinct mod n, and the new edge is a base for p.
/// Both orientations of the given edge are tried.
std::optional<Thrackle> adjacency_move(const Thrackle& g, Edge edge, const WeightedSetPartition& p);
std::optional<Thrackle> adjacency_move(const Thrackle& g, Edge edge);

// Number of applicable moves.
int move_degree(const Thrackle& g, const WeightedSetPartition& p);
// Closed-form degree of a cell of the second hypersimplex.
int simplex_degree(const Thrackle& g);
std::map<int, Int> degree_histogram(const WeightedSetPartition& p);

struct FPolynomialCheck {
  IntPolynomial direct;
  IntPolynomial series;
};

/// Face polynomial of the complex of sorted subsets of 2-subsets of [n],
/// by enumeration and by series expansion of the generating function.
FPolynomialCheck f_polynomial_check(int n);

}  // namespace alcove
