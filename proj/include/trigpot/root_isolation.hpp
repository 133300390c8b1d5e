#ifndef TRIGPOT_ROOT_ISOLATION_HPP
#define TRIGPOT_ROOT_ISOLATION_HPP

#include "trigpot/rational.hpp"
#include "trigpot/unipoly.hpp"

#include <vector>

namespace trigpot {

// Closed rational interval [lo, hi] containing exactly one real root of the
// isolated polynomial. lo == hi marks an exact rational root; otherwise both
// endpoints are non-roots.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
};

// Sturm chain of a squarefree primitive integer polynomial.
class SturmChain {
  public:
    explicit SturmChain(const UniPoly<Rational>& squarefree);
    // number of distinct real roots in the half-open interval (a, b], a < b
    int count_roots(const Rational& a, const Rational& b) const;
    int variations_at(const Rational& x) const;

  private:
    std::vector<UniPoly<Rational>> chain_;
};

// Strict bound B with all real roots of p in (-B, B).
Rational cauchy_root_bound(const UniPoly<Rational>& p);

// One disjoint interval per distinct real root of p (p nonzero; squarefree
// part is taken internally). Throws MathError on the zero polynomial.
std::vector<RootInterval> isolate_real_roots(const UniPoly<Rational>& p);

// Shrink an isolating interval of the squarefree polynomial until its width
// is at most `width`.
RootInterval refine_root(const UniPoly<Rational>& squarefree, RootInterval iv, const Rational& width);

}  // namespace trigpot

#endif
