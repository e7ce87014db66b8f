#pragma once

#include <vector>

#include "drckit/biordered.hpp"
#include "drckit/projection_algebra.hpp"

namespace drckit {

// Nonempty tuple of projections with consecutive entries F-related.
using Path = std::vector<int>;

bool is_path(const ProjectionAlgebra& pa, const Path& p);

// Junction shared: the common endpoint appears once in the result.
Path compose_paths(const Path& a, const Path& b);

// Entry i of the result is q pushed through theta at the first i+1 entries.
// Requires q <= first entry; same length as the input.
Path left_restrict_path(const ProjectionAlgebra& pa, int q, const Path& p);

// Mirror image: r pushed through delta from the back. Requires r <= last.
Path right_restrict_path(const ProjectionAlgebra& pa, const Path& p, int r);

// Collapses adjacent duplicates; the normal form of a chain.
Path normalize_chain(const Path& p);

// Chain operations: act on normal forms, renormalise the result.
Path chain_compose(const Path& a, const Path& b);
Path chain_left_restrict(const ProjectionAlgebra& pa, int q, const Path& p);
Path chain_right_restrict(const ProjectionAlgebra& pa, const Path& p, int r);

// All duplicate-free paths of length <= max_len, sorted by length then
// lexicographically; the first n entries are the singletons.
std::vector<Path> all_chains(const ProjectionAlgebra& pa, int max_len);

// The chain category on those normal forms. Composites whose result would
// exceed max_len are omitted and trunc_bound records the cap; if nothing
// was omitted the result is marked complete. Restrictions never grow, so
// they are always total.
BiorderedCategory chain_category(const ProjectionAlgebra& pa, int max_len);

// Desk-scale oracle: every path (duplicates allowed) of length <= max_len,
// with the classes of the congruence generated by collapsing a repeated
// entry, closed under composition and both restrictions within the bound.
struct PathClosure {
  std::vector<Path> paths;
  std::vector<int> cls;
};
PathClosure path_congruence_closure(const ProjectionAlgebra& pa, int max_len);

}  // namespace drckit
