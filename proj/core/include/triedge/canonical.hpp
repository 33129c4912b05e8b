#pragma once

#include <span>
#include <vector>

#include "triedge/graph.hpp"

namespace triedge {

/// Result of canonical labelling.
///
/// `form` is the relabelled graph: position i of `form` holds input vertex
/// lab[i]. Two graphs are isomorphic iff their forms are equal. `orbit[v]` is
/// the smallest vertex of v's automorphism orbit.
struct Canonical {
  Graph form;
  std::vector<int> lab;
  std::vector<int> orbit;
  int generators = 0;
};

/// Individualisation-refinement search over equitable partitions, pruned by
/// the automorphisms found on the way. Intended for the small orders used by
/// the exhaustive search; works for any order up to 64.
Canonical canonical_form(const Graph& g);

/// Canonical form of a vertex-coloured graph. Isomorphisms must preserve
/// colours; cells of the initial partition are ordered by colour value.
Canonical canonical_form(const Graph& g, std::span<const int> colours);

}  // namespace triedge
