#pragma once

#include <vector>

#include "drckit/chains.hpp"
#include "drckit/projection_algebra.hpp"
#include "drckit/report.hpp"
#include "drckit/semigroup.hpp"

namespace drckit {

// A word over the projection alphabet; letters are algebra indices.
using Word = std::vector<int>;

// Sweeps a word into an equivalent linked word: consecutive entries end up
// F-related, every entry sits below the letter it came from, and adjacent
// duplicates are collapsed. The result generates the same class under the
// defining relations.
Path rewrite_to_path(const ProjectionAlgebra& pa, const Word& w);

// The word semigroup on the projection alphabet modulo the defining
// relations, materialized up to a length bound. Classes are computed over
// every word of length <= max_len + slack by closing under single steps on
// each adjacent pair (p, q): dropping one of two equal letters, replacing
// the right letter by p theta_q, and replacing the left letter by
// q delta_p. Class ids are assigned by first occurrence in length-then-lex
// order, so ids below num_classes are exactly the classes with a
// representative of length <= max_len.
struct BoundedFreeSemigroup {
    ProjectionAlgebra pa;
    int max_len = 0;
    int slack = 0;
    std::vector<Word> words;
    std::vector<int> cls;
    std::vector<int> rep_index;  // first (shortest) word of each class
    int num_classes = 0;
    int num_classes_total = 0;

    // -1 when the word is longer than the store covers.
    long long word_index(const Word& w) const;
    int class_of(const Word& w) const;
    Word rep(int c) const;
};

BoundedFreeSemigroup build_bounded_free(const ProjectionAlgebra& pa, int max_len, int slack = 2);

// Class product via concatenated representatives, rewritten when the plain
// concatenation escapes the store; -1 when even the rewritten form does.
int bounded_product(const BoundedFreeSemigroup& f, int ca, int cb);

// Endpoint classes of the rewritten representative.
int bounded_d(const BoundedFreeSemigroup& f, int c);
int bounded_r(const BoundedFreeSemigroup& f, int c);

// Multiplication table over the in-bound classes. Throws Error when some
// product does not resolve within the store.
FiniteSemigroup as_semigroup(const BoundedFreeSemigroup& f);

// The map p |-> class of the one-letter word p: injective, lands on
// projection classes, and carries the original tables to the induced ones.
AxiomReport check_free_projections(const BoundedFreeSemigroup& f);

// A pair of composite actions on the algebra together with a linked word
// realizing it.
struct MPElement {
    std::vector<int> tmap;  // right action: fold theta over the letters in order
    std::vector<int> dmap;  // left action: fold delta over the letters in reverse
    Path witness;
};

// The action pair of a word, with its rewritten witness.
MPElement psi(const ProjectionAlgebra& pa, const Word& w);

struct MPSemigroup {
    ProjectionAlgebra pa;
    std::vector<MPElement> elems;
    std::vector<int> gen_idx;  // element of the one-letter word per projection
    FiniteSemigroup sg;

    int elem_of(const std::vector<int>& tmap, const std::vector<int>& dmap) const;
};

// Closure of the one-letter action pairs under the product. Witnesses are
// composed by restricting the two paths toward their junction and
// concatenating; the composed actions are re-verified against the witness.
MPSemigroup mp_of(const ProjectionAlgebra& pa);

// Multiplicative extension of a generator assignment (algebra index ->
// element of s) over the stored words. Throws Error when two words of one
// class get different images. Returns the image of each in-bound class.
std::vector<int> induced_morphism(const BoundedFreeSemigroup& f,
                                  const std::vector<int>& gen_img,
                                  const FiniteSemigroup& s);

// Freeness evidence for one target: the given assignment extends to a map
// preserving product, D and R, it is the only assignment into the
// projections of s doing so while fixing the one-letter classes the same
// way, and assignments admitting valid extensions are exactly the algebra
// morphisms.
AxiomReport check_unique_extension(const BoundedFreeSemigroup& f,
                                   const FiniteSemigroup& s,
                                   const std::vector<int>& gen_img);

// All projections commute.
bool is_ehresmann(const FiniteSemigroup& s);

// The two restriction laws D(ab)a = aD(R(a)b) and aR(ba) = R(bD(a))a,
// quantified over all pairs.
bool is_drc_restriction(const FiniteSemigroup& s);

// The two natural element orders agree.
bool orders_coincide(const FiniteSemigroup& s);

}  // namespace drckit
