#ifndef TRIGPOT_RING_HPP
#define TRIGPOT_RING_HPP

#include "trigpot/rational.hpp"

#include <string>

namespace trigpot {

// Minimal ring protocol used by the generic containers (UniPoly, matrices,
// towers): default construction = 0, ring_one<R>(), is_zero(), operators.
// Specialize ring_one / ring_str for new coefficient types.

template <class R>
R ring_one() { return R::one(); }

template <>
inline Rational ring_one<Rational>() { return Rational(1); }

template <class R>
bool ring_is_zero(const R& x) { return x.is_zero(); }

template <class R>
std::string ring_str(const R& x) { return x.str(); }

}  // namespace trigpot

#endif
