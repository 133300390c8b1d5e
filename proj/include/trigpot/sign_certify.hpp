#ifndef TRIGPOT_SIGN_CERTIFY_HPP
#define TRIGPOT_SIGN_CERTIFY_HPP

#include "trigpot/ratfunc.hpp"
#include "trigpot/root_isolation.hpp"
#include "trigpot/unipoly.hpp"

#include <optional>
#include <string>

namespace trigpot {

struct SignCert {
    enum class Kind { Positive, Negative, Failed };
    Kind kind = Kind::Failed;
    std::optional<RootInterval> witness;  // on failure: interval containing a root >= n0
    std::string diag;

    bool ok() const { return kind != Kind::Failed; }
    int sign() const {
        if (!ok()) throw MathError("SignCert: no sign on failed certification");
        return kind == Kind::Positive ? 1 : -1;
    }
    static SignCert positive() { return {Kind::Positive, std::nullopt, {}}; }
    static SignCert negative() { return {Kind::Negative, std::nullopt, {}}; }
    static SignCert failed(std::string d, std::optional<RootInterval> w = std::nullopt) {
        return {Kind::Failed, std::move(w), std::move(d)};
    }
};

// Certified constant sign of p(n) for all real n >= n0 (p a polynomial):
// p has no real root >= n0 and the sign at n0 is returned.
SignCert sign_certify_poly(const UniPoly<Rational>& p, const Rational& n0);

// Certified constant sign of f = num/den on [n0, oo): the denominator is
// verified root-free there first.
SignCert sign_certify_univariate(const RatFunc& f, const Rational& n0);

// Bivariate polynomial in (n, h): outer variable h, coefficients are
// polynomials in n.
using BiPoly = UniPoly<UniPoly<Rational>>;

// Certified constant sign of G(n, h) on { n >= n0, h_low(n) <= h <= h_high(n) }.
// Sound scheme: boundary sign certification, no zero critical values
// (res_h(G, dG/dh) root-free past n0), no critical-branch births
// (res_h(dG/dh, d2G/dh2) root-free past n0), and sign check of the critical
// values on the n0 slice.
SignCert sign_certify_region(const BiPoly& g, const Rational& n0, const RatFunc& h_low,
                             const RatFunc& h_high);

// helpers shared with asympt
UniPoly<Rational> bipoly_eval_n(const BiPoly& g, const Rational& n0);  // -> poly in h
RatFunc bipoly_eval_h(const BiPoly& g, const RatFunc& h);              // -> rational function of n

}  // namespace trigpot

#endif
