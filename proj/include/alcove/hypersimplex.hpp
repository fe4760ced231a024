#pragma once

#include <string>
#include <vector>

#include "alcove/core.hpp"
#include "alcove/geometry.hpp"

namespace alcove {

/// The hypersimplex: 0/1 vectors of R^n with exactly k ones, 0 < k < n.
struct HypersimplexId {
  int k = 0;
  int n = 0;

  HypersimplexId(int k_, int n_);
};

enum class HypersimplexMethod { stanley, sorted, circuit, alcove };

// The 0/1 indicator vector of a subset.
Point indicator(const Multiset& subset);
// All 0/1 vectors with k ones, lexicographically sorted.
std::vector<Point> hypersimplex_vertices(const HypersimplexId& id);

/// Minimal circuit with edge labels w_1, ..., w_n of the canonical word
/// (w_n = n). Throws InvalidCycleError unless des(w^-1) = k - 1.
Circuit circuit_of_cycle(const LongCycle& c, int k);

/// Minimal circuits found by search in the shifting graph on the vertices,
/// ordered by their cycle label.
std::vector<Circuit> enumerate_minimal_circuits(const HypersimplexId& id);

/// Cell of the Stanley triangulation for w in S_{n-1}, lifted to sum(x) = k.
/// Equals the circuit cell labeled w_1 ... w_{n-1} n.
Simplex stanley_simplex(const Permutation& w, int k);

std::vector<std::vector<Multiset>> enumerate_sorted_collections(const HypersimplexId& id, bool maximal_only);

/// For a maximal sorted collection, with a_1 <= ... <= a_{kn} the sorted
/// union and alpha_i the last index holding the value i, the word
/// (alpha_1 mod n) ... (alpha_{n-1} mod n) n. Entry i is the step at which
/// label i fires along the circuit, so this is the inverse of the label word.
Permutation firing_times(const std::vector<Multiset>& collection);

/// Label word w_1 ... w_{n-1} n of the circuit through the collection.
Permutation theta(const std::vector<Multiset>& collection);

std::vector<Simplex> triangulate(const HypersimplexId& id, HypersimplexMethod method);

// The cycle word of a cell, computed through theta.
std::string hypersimplex_cell_label(const Simplex& cell);

/// (w) is obtained from (u) by exchanging two cyclically consecutive entries
/// u_i, u_{i+1} with u_i - u_{i+1} != +-1 (mod n).
bool are_adjacent(const LongCycle& u, const LongCycle& w);

// Nodes are the cycle words in lexicographic order.
DualGraph dual_graph(const HypersimplexId& id);

}  // namespace alcove
