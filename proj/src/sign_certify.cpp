#include "trigpot/sign_certify.hpp"

#include "trigpot/errors.hpp"

namespace trigpot {

namespace {

// true if every real root of p lies strictly below n0; on failure fills
// `witness` with an interval around a root at or beyond n0.
bool roots_below(const UniPoly<Rational>& p, const Rational& n0, std::optional<RootInterval>& witness) {
    if (p.degree() <= 0) return true;
    const UniPoly<Rational> sf = primitive_integer_part(squarefree_part(p));
    if (!sf.eval(n0).is_zero()) {
        // nothing
    } else {
        witness = RootInterval{n0, n0};
        return false;
    }
    for (auto iv : isolate_real_roots(sf)) {
        while (true) {
            if (iv.hi < n0) break;
            if (iv.lo >= n0 || iv.is_point()) {
                witness = iv;
                return false;
            }
            // interval straddles n0 but n0 itself is not a root: refine
            iv = refine_root(sf, iv, iv.width() / Rational(4));
        }
    }
    return true;
}

}  // namespace

SignCert sign_certify_poly(const UniPoly<Rational>& p, const Rational& n0) {
    if (p.is_zero()) return SignCert::failed("polynomial is identically zero");
    std::optional<RootInterval> w;
    if (!roots_below(p, n0, w)) return SignCert::failed("root at or beyond n0", w);
    const int s = p.eval(n0).sign();
    return s > 0 ? SignCert::positive() : SignCert::negative();
}

SignCert sign_certify_univariate(const RatFunc& f, const Rational& n0) {
    if (f.is_zero()) return SignCert::failed("function is identically zero");
    const SignCert den = sign_certify_poly(f.den(), n0);
    if (!den.ok()) return SignCert::failed("denominator not root-free on [n0, oo): " + den.diag, den.witness);
    const SignCert num = sign_certify_poly(f.num(), n0);
    if (!num.ok()) return SignCert::failed("numerator has a root at or beyond n0: " + num.diag, num.witness);
    return num.sign() * den.sign() > 0 ? SignCert::positive() : SignCert::negative();
}

UniPoly<Rational> bipoly_eval_n(const BiPoly& g, const Rational& n0) {
    std::vector<Rational> cc;
    cc.reserve(g.size());
    for (size_t k = 0; k < g.size(); k++) cc.push_back(g.coeff(k).eval(n0));
    return UniPoly<Rational>(std::move(cc));
}

RatFunc bipoly_eval_h(const BiPoly& g, const RatFunc& h) {
    RatFunc acc;
    for (size_t k = g.size(); k-- > 0;) acc = acc * h + RatFunc(g.coeff(k));
    return acc;
}

namespace {

// sign of the univariate rational-coefficient polynomial `p` at the unique
// root of `q` inside `iv` (p must not vanish there; q squarefree on iv).
int sign_at_algebraic(const UniPoly<Rational>& p, const UniPoly<Rational>& q, RootInterval iv) {
    if (iv.is_point()) {
        const int s = p.eval(iv.lo).sign();
        if (s == 0) throw MathError("sign_at_algebraic: p vanishes at the algebraic point");
        return s;
    }
    for (int iter = 0; iter < 4096; iter++) {
        const int slo = p.eval(iv.lo).sign();
        const int shi = p.eval(iv.hi).sign();
        if (slo != 0 && slo == shi) {
            // p has constant sign on [lo,hi] unless it has a root inside;
            // count p-roots inside to be sure.
            const UniPoly<Rational> sf = primitive_integer_part(squarefree_part(p));
            const SturmChain st(sf);
            if (st.count_roots(iv.lo, iv.hi) == 0) return slo;
        }
        iv = refine_root(q, iv, iv.width() / Rational(16));
        if (iv.is_point()) return sign_at_algebraic(p, q, iv);
    }
    throw MathError("sign_at_algebraic: did not separate");
}

// all real roots h* of `crit` (in h) that lie in [lo, hi] have g-value of sign
// `sigma` (g, crit univariate in h over Q)
bool critical_values_ok(const UniPoly<Rational>& g, const UniPoly<Rational>& crit, const Rational& lo,
                        const Rational& hi, int sigma, std::string& diag) {
    if (crit.degree() <= 0) return true;
    const UniPoly<Rational> sf = primitive_integer_part(squarefree_part(crit));
    for (auto iv : isolate_real_roots(sf)) {
        // refine until clearly inside or clearly outside [lo, hi]
        bool inside;
        while (true) {
            if (iv.hi < lo || iv.lo > hi) {
                inside = false;
                break;
            }
            if (iv.lo >= lo && iv.hi <= hi) {
                inside = true;
                break;
            }
            if (iv.is_point()) {
                inside = iv.lo >= lo && iv.lo <= hi;
                break;
            }
            // straddles an endpoint; the endpoint may be a root of crit
            if (sf.eval(lo).is_zero() && iv.lo <= lo && lo <= iv.hi) {
                inside = true;  // treat boundary-critical point as in range
                iv = RootInterval{lo, lo};
                break;
            }
            if (sf.eval(hi).is_zero() && iv.lo <= hi && hi <= iv.hi) {
                inside = true;
                iv = RootInterval{hi, hi};
                break;
            }
            iv = refine_root(sf, iv, iv.width() / Rational(4));
        }
        if (!inside) continue;
        int s;
        try {
            s = sign_at_algebraic(g, sf, iv);
        } catch (const MathError& e) {
            diag = std::string("critical value sign: ") + e.what();
            return false;
        }
        if (s != sigma) {
            diag = "interior critical point with opposite sign at the n0 slice";
            return false;
        }
    }
    return true;
}

}  // namespace

SignCert sign_certify_region(const BiPoly& g, const Rational& n0, const RatFunc& h_low,
                             const RatFunc& h_high) {
    if (g.is_zero()) return SignCert::failed("region certification of the zero polynomial");
    const int hdeg = g.degree();

    // (0) envelope order: h_low <= h_high on [n0, oo) (allow touching at n0 only
    // if the difference is nonnegative; we require the strict certificate and
    // fall back to equality check)
    {
        const RatFunc diff = h_high - h_low;
        if (!diff.is_zero()) {
            const SignCert c = sign_certify_univariate(diff, n0);
            if (!c.ok() || c.kind == SignCert::Kind::Negative)
                return SignCert::failed("envelope order h_low <= h_high not certified: " + c.diag, c.witness);
        }
    }

    if (hdeg <= 0) {
        // h-free: plain univariate certification of the single coefficient
        return sign_certify_univariate(RatFunc(g.coeff(0)), n0);
    }

    // (1) boundary certificates
    const RatFunc on_low = bipoly_eval_h(g, h_low);
    const RatFunc on_high = bipoly_eval_h(g, h_high);
    const SignCert c_low = sign_certify_univariate(on_low, n0);
    if (!c_low.ok()) return SignCert::failed("boundary h=h_low: " + c_low.diag, c_low.witness);
    const SignCert c_high = sign_certify_univariate(on_high, n0);
    if (!c_high.ok()) return SignCert::failed("boundary h=h_high: " + c_high.diag, c_high.witness);
    if (c_low.kind != c_high.kind)
        return SignCert::failed("boundary signs differ between h_low and h_high");
    const int sigma = c_low.sign();

    if (hdeg >= 2) {
        const BiPoly gh = g.derivative();
        // leading h-coefficients must keep their degree on [n0, oo) so that
        // critical branches can neither appear nor escape through h = oo
        {
            const SignCert clc = sign_certify_poly(g.lc(), n0);
            if (!clc.ok()) return SignCert::failed("lc_h(G) vanishes past n0: " + clc.diag, clc.witness);
            const SignCert clch = sign_certify_poly(gh.lc(), n0);
            if (!clch.ok()) return SignCert::failed("lc_h(G_h) vanishes past n0: " + clch.diag, clch.witness);
        }
        // (2) no zero critical values for n >= n0
        UniPoly<Rational> r0;
        try {
            r0 = resultant(g, gh);
        } catch (const MathError& e) {
            return SignCert::failed(std::string("res_h(G, G_h) failed: ") + e.what());
        }
        const SignCert c0 = sign_certify_poly(r0, n0);
        if (!c0.ok()) return SignCert::failed("res_h(G, G_h) not root-free past n0: " + c0.diag, c0.witness);

        // (3) no critical-branch births/merges for n >= n0
        if (gh.degree() >= 2) {
            UniPoly<Rational> rb;
            try {
                rb = resultant(gh, gh.derivative());
            } catch (const MathError& e) {
                return SignCert::failed(std::string("res_h(G_h, G_hh) failed: ") + e.what());
            }
            const SignCert cb = sign_certify_poly(rb, n0);
            if (!cb.ok())
                return SignCert::failed("critical-branch birth locus not root-free past n0: " + cb.diag,
                                        cb.witness);
        }

        // (4) critical values on the n0 slice
        const UniPoly<Rational> g_slice = bipoly_eval_n(g, n0);
        const UniPoly<Rational> gh_slice = bipoly_eval_n(gh, n0);
        const Rational lo = h_low.eval(n0), hi = h_high.eval(n0);
        std::string diag;
        if (!critical_values_ok(g_slice, gh_slice, lo, hi, sigma, diag))
            return SignCert::failed("n0-slice critical values: " + diag);
    }

    return sigma > 0 ? SignCert::positive() : SignCert::negative();
}

}  // namespace trigpot
