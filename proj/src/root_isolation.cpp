#include "trigpot/root_isolation.hpp"

#include "trigpot/errors.hpp"

namespace trigpot {

SturmChain::SturmChain(const UniPoly<Rational>& squarefree) {
    UniPoly<Rational> p0 = primitive_integer_part(squarefree);
    UniPoly<Rational> p1 = primitive_integer_part(p0.derivative());
    chain_.push_back(p0);
    if (p1.is_zero()) return;
    chain_.push_back(p1);
    while (true) {
        const auto& a = chain_[chain_.size() - 2];
        const auto& b = chain_.back();
        auto [q, r] = div_qr(a, b);
        if (r.is_zero()) break;
        chain_.push_back(primitive_integer_part(-r));
        if (chain_.back().degree() == 0) break;
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int var = 0;
    int prev = 0;
    for (const auto& p : chain_) {
        const int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) var++;
        prev = s;
    }
    return var;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

Rational cauchy_root_bound(const UniPoly<Rational>& p) {
    if (p.is_zero()) throw MathError("cauchy_root_bound: zero polynomial");
    const Rational lc = p.lc().abs();
    Rational m(0);
    for (int i = 0; i < p.degree(); i++) {
        const Rational v = p.coeff(static_cast<size_t>(i)).abs() / lc;
        if (v > m) m = v;
    }
    return m + Rational(1);
}

namespace {

// count == 1 on (a, b]: emit an interval whose closure contains exactly the
// one root. The left endpoint may be a root of p from an earlier split (it is
// not the counted one); shrink until both endpoints are non-roots.
void emit_single(const UniPoly<Rational>& p, Rational a, Rational b, std::vector<RootInterval>& out) {
    if (p.eval(b).is_zero()) {
        out.push_back({b, b});
        return;
    }
    while (p.eval(a).is_zero()) {
        const Rational mid = (a + b) / Rational(2);
        const int sm = p.eval(mid).sign();
        if (sm == 0) {
            out.push_back({mid, mid});
            return;
        }
        if (sm != p.eval(b).sign()) {
            a = mid;  // root is in (mid, b)
        } else {
            b = mid;  // root is in (a, mid)
        }
    }
    out.push_back({a, b});
}

void isolate_rec(const UniPoly<Rational>& p, const SturmChain& sturm, const Rational& a,
                 const Rational& b, int count, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        emit_single(p, a, b, out);
        return;
    }
    const Rational mid = (a + b) / Rational(2);
    const int left = sturm.count_roots(a, mid);
    isolate_rec(p, sturm, a, mid, left, out);
    isolate_rec(p, sturm, mid, b, count - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UniPoly<Rational>& p) {
    if (p.is_zero()) throw MathError("isolate_real_roots: zero polynomial");
    if (p.degree() == 0) return {};
    const UniPoly<Rational> sf = primitive_integer_part(squarefree_part(p));
    if (sf.degree() == 0) return {};
    const SturmChain sturm(sf);
    const Rational bound = cauchy_root_bound(sf);
    std::vector<RootInterval> out;
    isolate_rec(sf, sturm, -bound, bound, sturm.count_roots(-bound, bound), out);
    return out;
}

RootInterval refine_root(const UniPoly<Rational>& squarefree, RootInterval iv, const Rational& width) {
    if (iv.is_point()) return iv;
    int sa = squarefree.eval(iv.lo).sign();
    if (sa == 0) throw MathError("refine_root: endpoint is a root");
    while (iv.width() > width) {
        const Rational mid = (iv.lo + iv.hi) / Rational(2);
        const int sm = squarefree.eval(mid).sign();
        if (sm == 0) return {mid, mid};
        if (sm == sa) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

}  // namespace trigpot
