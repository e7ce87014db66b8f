#pragma once

#include <string>
#include <vector>

#include "drckit/projection_algebra.hpp"
#include "drckit/semigroup.hpp"

namespace drckit {

// Small structures the tests and the command line tool exercise end to end.
// Every builder is deterministic, so the serialized corpus can be
// regenerated and compared byte for byte.

struct CorpusSemigroup {
    std::string name;
    FiniteSemigroup sg;
    bool inverse = false;  // flagged members have commuting D/R built from a star
};

struct CorpusAlgebra {
    std::string name;
    ProjectionAlgebra pa;
};

// A generator assignment from a corpus algebra into the projections of a
// corpus semigroup, for exercising induced extensions.
struct BundledMorphism {
    std::string algebra;
    std::string semigroup;
    std::vector<int> image;  // element ids in the target semigroup
};

// Two element chain under minimum; all elements are projections.
FiniteSemigroup make_chain2();

// Three element chain under minimum.
FiniteSemigroup make_chain3();

// 2x2 rectangular band: (i,j)(k,l) = (i,l), stored as 2i+j.
FiniteSemigroup make_rb22();

// Five element combinatorial Brandt semigroup: zero and the four 2x2 matrix
// units, with D(a) = a a^T and R(a) = a^T a.
FiniteSemigroup make_b2();

// Direct product of the two element chain with the cyclic group of order
// three, stored as 3s + g.
FiniteSemigroup make_chain2xc3();

// All sixteen binary relations on two points under composition; D and R are
// the domain and image subidentities.
FiniteSemigroup make_rel2();

std::vector<CorpusSemigroup> corpus_semigroups();
std::vector<CorpusAlgebra> corpus_algebras();
std::vector<BundledMorphism> corpus_morphisms();

// Lookup by name; throws Error on an unknown name.
FiniteSemigroup corpus_semigroup(const std::string& name);
ProjectionAlgebra corpus_algebra(const std::string& name);

}  // namespace drckit
