#pragma once

#include <vector>

#include "drckit/cpc.hpp"
#include "drckit/semigroup.hpp"

namespace drckit {

// The category of a semigroup: morphisms are elements, objects are the
// projections as their own indices, composition is the product where range
// meets domain, restrictions are one-sided products with projections, and
// evaluation of an F-pair is its product.
ChainedProjectionCategory c_of(const FiniteSemigroup& s);

// The semigroup of a category: same carrier, product via the double
// restriction through the evaluation of the linked pair. Requires a
// complete category (throws Error on a truncated one).
FiniteSemigroup s_of(const ChainedProjectionCategory& c);

// Literal table equality of the composite in either direction.
bool roundtrip_sc(const FiniteSemigroup& s);
bool roundtrip_cs(const ChainedProjectionCategory& c);

// A semigroup morphism reused verbatim as a functor between the induced
// categories. Throws Error unless phi is a DRC-morphism; the returned map
// is verified to be a cp functor before returning.
std::vector<int> transport_morphism(const FiniteSemigroup& src,
                                    const FiniteSemigroup& dst,
                                    const std::vector<int>& phi);

}  // namespace drckit
