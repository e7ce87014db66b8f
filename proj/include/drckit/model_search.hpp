#pragma once

#include <string>
#include <vector>

#include "drckit/projection_algebra.hpp"

namespace drckit {

// Known axiom identifiers (case-insensitive): p1..p10, lp1..lp4, rp1..rp4,
// pa1, pa2, p1'..p5', symmetry. The pN and pN' families quantify both the
// theta and the delta version; lp/rp touch a single table via the
// translations x(e,f) = de(e,f) and y(e,f) = th(f,e).
bool is_known_axiom(const std::string& id);

// Evaluates one axiom on full tables; used to cross-check emitted models.
bool axiom_holds(const std::string& id, const ProjectionAlgebra& pa);

struct SearchResult {
    std::vector<ProjectionAlgebra> models;  // pairwise non-isomorphic
    bool exhausted = false;                 // whole space explored at this size
    long long nodes = 0;
};

// Backtracking search over table cells for models of the given size that
// satisfy every axiom in `satisfy` and violate `violate`. Cells of a table
// no listed axiom mentions are not searched; that table is emitted as the
// identity action so the file stays well-formed. Determined ground
// instances prune eagerly and shallow instances force cell values.
// Emitted models are deduplicated by canonical form under carrier
// permutations. Throws Error on unknown ids or size < 1.
SearchResult search_models(const std::vector<std::string>& satisfy, const std::string& violate,
                           int size, int limit);

}  // namespace drckit
