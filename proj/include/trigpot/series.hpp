#ifndef TRIGPOT_SERIES_HPP
#define TRIGPOT_SERIES_HPP

#include "trigpot/errors.hpp"
#include "trigpot/rational.hpp"
#include "trigpot/ring.hpp"
#include "trigpot/unipoly.hpp"

#include <array>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace trigpot {

// Polynomial in the residue marker alpha, truncated at degree 3. Discarding
// the degree >= 4 part of products is sound here: alpha-degrees are never
// negative, so those terms cannot feed back into degrees <= 3.
class AlphaPoly {
  public:
    AlphaPoly() = default;
    AlphaPoly(Rational c0) { c_[0] = std::move(c0); }  // NOLINT(hicpp-explicit-conversions)
    AlphaPoly(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static AlphaPoly one() { return AlphaPoly(Rational(1)); }
    static AlphaPoly alpha() { return AlphaPoly(Rational(0), Rational(1), Rational(0), Rational(0)); }

    const Rational& operator[](size_t i) const { return c_[i]; }
    Rational& operator[](size_t i) { return c_[i]; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }

    AlphaPoly operator-() const { return AlphaPoly(-c_[0], -c_[1], -c_[2], -c_[3]); }
    AlphaPoly& operator+=(const AlphaPoly& o) {
        for (int i = 0; i < 4; i++) c_[i] += o.c_[i];
        return *this;
    }
    AlphaPoly& operator-=(const AlphaPoly& o) {
        for (int i = 0; i < 4; i++) c_[i] -= o.c_[i];
        return *this;
    }
    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { a += b; return a; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { a -= b; return a; }

    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
        AlphaPoly r;
        for (int i = 0; i < 4; i++) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j < 4; j++) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    AlphaPoly& operator*=(const AlphaPoly& o) { return *this = *this * o; }

    AlphaPoly scaled(const Rational& s) const {
        return AlphaPoly(c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s);
    }

    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const AlphaPoly& a, const AlphaPoly& b) { return !(a == b); }

    std::string str() const {
        return c_[0].str() + " + " + c_[1].str() + "*a + " + c_[2].str() + "*a^2 + " + c_[3].str() +
               "*a^3";
    }

  private:
    std::array<Rational, 4> c_{};
};

namespace series_detail {
inline void scale_coeff(Rational& c, const Rational& s) { c *= s; }
inline void scale_coeff(AlphaPoly& c, const Rational& s) { c = c.scaled(s); }
}  // namespace series_detail

// Truncated Laurent series at t = infinity. Coefficients are stored for the
// exponent window [low, top]; everything above `top` is exactly zero. When
// `exact` is set the series is a genuine Laurent polynomial and everything
// below `low` is exactly zero too; otherwise coefficients below `low` are
// UNKNOWN and reading them throws TruncationError. All operations track the
// known window conservatively.
template <class C>
class SeriesInf {
  public:
    SeriesInf() : low_(1), exact_(true) {}  // exact zero

    static SeriesInf zero() { return SeriesInf(); }

    static SeriesInf from_coeffs(int top_exp, std::vector<C> descending, bool exact) {
        SeriesInf s;
        s.exact_ = exact;
        s.low_ = top_exp - static_cast<int>(descending.size()) + 1;
        s.c_.assign(descending.rbegin(), descending.rend());
        s.trim();
        return s;
    }

    template <class R2>
    static SeriesInf from_poly(const UniPoly<R2>& p) {
        SeriesInf s;
        s.exact_ = true;
        s.low_ = 0;
        s.c_.reserve(p.size());
        for (size_t i = 0; i < p.size(); i++) s.c_.push_back(C(p.coeff(i)));
        s.trim();
        return s;
    }

    static SeriesInf monomial(C c, int exp) {
        SeriesInf s;
        s.exact_ = true;
        s.low_ = exp;
        s.c_.push_back(std::move(c));
        s.trim();
        return s;
    }

    bool exact() const { return exact_; }
    // exponent floor of the known window
    int low() const { return low_; }
    // highest exponent with a (possibly zero) stored coefficient; coefficients
    // above are exactly zero. For an empty window returns low()-1.
    int top() const { return low_ + static_cast<int>(c_.size()) - 1; }
    bool known_zero() const { return c_.empty(); }
    size_t stored_size() const { return c_.size(); }

    // coefficient of t^exp
    const C& coeff(int exp) const {
        static const C zero_c{};
        if (exp > top()) return zero_c;
        if (exp < low_) {
            if (exact_) return zero_c;
            throw TruncationError("SeriesInf: coefficient below known range (exp " +
                                  std::to_string(exp) + " < floor " + std::to_string(low_) + ")");
        }
        return c_[static_cast<size_t>(exp - low_)];
    }

    C residue_at_infinity() const { return coeff(-1); }

    SeriesInf operator-() const {
        SeriesInf r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend SeriesInf operator+(const SeriesInf& a, const SeriesInf& b) {
        SeriesInf r;
        r.exact_ = a.exact_ && b.exact_;
        const int lo = r.exact_ ? std::min(a.low_, b.low_)
                                : std::max(a.exact_ ? b.low_ : a.low_, b.exact_ ? a.low_ : b.low_);
        const int hi = std::max(a.top(), b.top());
        if (hi < lo) {
            r.low_ = lo;
            return r;
        }
        r.low_ = lo;
        r.c_.assign(static_cast<size_t>(hi - lo + 1), C{});
        for (int e = lo; e <= hi; e++) {
            C v = (e >= a.low_ || a.exact_) ? a.coeff(e) : C{};
            if (e >= b.low_ || b.exact_) v += b.coeff(e);
            r.c_[static_cast<size_t>(e - lo)] = std::move(v);
        }
        r.trim();
        return r;
    }
    friend SeriesInf operator-(const SeriesInf& a, const SeriesInf& b) { return a + (-b); }
    SeriesInf& operator+=(const SeriesInf& o) { return *this = *this + o; }
    SeriesInf& operator-=(const SeriesInf& o) { return *this = *this - o; }

    // Full product with the conservative window rule: the coefficient at k is
    // known when k >= low_a + top_b (a inexact) and k >= low_b + top_a
    // (b inexact).
    friend SeriesInf operator*(const SeriesInf& a, const SeriesInf& b) {
        SeriesInf r;
        r.exact_ = a.exact_ && b.exact_;
        if (a.known_zero() && a.exact_) return SeriesInf();
        if (b.known_zero() && b.exact_) return SeriesInf();
        int lo;
        if (r.exact_) {
            lo = a.low_ + b.low_;
        } else {
            lo = std::numeric_limits<int>::min();
            if (!a.exact_) lo = std::max(lo, a.low_ + b.top());
            if (!b.exact_) lo = std::max(lo, b.low_ + a.top());
            if (a.known_zero() || b.known_zero()) {
                // all known coefficients of the product are zero
                r.low_ = lo;
                return r;
            }
        }
        const int hi = a.top() + b.top();
        if (hi < lo) {
            r.low_ = lo;
            return r;
        }
        r.low_ = lo;
        r.c_.assign(static_cast<size_t>(hi - lo + 1), C{});
        const int alo = a.low_, blo = b.low_;
        for (size_t i = 0; i < a.c_.size(); i++) {
            if (ring_is_zero(a.c_[i])) continue;
            const int ea = alo + static_cast<int>(i);
            for (size_t j = 0; j < b.c_.size(); j++) {
                if (ring_is_zero(b.c_[j])) continue;
                const int k = ea + blo + static_cast<int>(j);
                if (k < lo) continue;
                r.c_[static_cast<size_t>(k - lo)] += a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }
    SeriesInf& operator*=(const SeriesInf& o) { return *this = *this * o; }

    SeriesInf scaled(const Rational& s) const {
        SeriesInf r = *this;
        if (s.is_zero()) {
            r.c_.clear();
        } else {
            for (auto& v : r.c_) series_detail::scale_coeff(v, s);
        }
        r.trim();
        return r;
    }

    SeriesInf scaled_coeff(const C& s) const {
        SeriesInf r = *this;
        for (auto& v : r.c_) v = v * s;
        r.trim();
        return r;
    }

    SeriesInf shifted(int k) const {  // multiply by t^k
        SeriesInf r = *this;
        r.low_ += k;
        return r;
    }

    // Termwise d/dt.
    SeriesInf derivative() const {
        SeriesInf r;
        r.exact_ = exact_;
        r.low_ = low_ - 1;
        r.c_.assign(c_.size(), C{});
        for (size_t i = 0; i < c_.size(); i++) {
            const long e = low_ + static_cast<long>(i);
            if (e == 0) continue;
            C v = c_[i];
            series_detail::scale_coeff(v, Rational(e));
            r.c_[i] = std::move(v);
        }
        r.trim();
        return r;
    }

    // Termwise antiderivative with integration constant 0. Requires the t^-1
    // coefficient to be known and exactly zero; otherwise the antiderivative
    // would contain log t.
    SeriesInf integrated() const {
        if (!exact_ && low_ > -1)
            throw TruncationError("series_integrate: t^-1 coefficient not in the known range");
        const C res = coeff(-1);
        if (!ring_is_zero(res)) throw LogObstructionError(ring_str(res));
        SeriesInf r;
        r.exact_ = exact_;
        r.low_ = low_ + 1;
        r.c_.assign(c_.size(), C{});
        for (size_t i = 0; i < c_.size(); i++) {
            const long e = low_ + static_cast<long>(i);
            if (e == -1) continue;  // checked zero
            C v = c_[i];
            series_detail::scale_coeff(v, Rational(1, e + 1));
            r.c_[static_cast<size_t>(i)] = std::move(v);
        }
        r.trim();
        return r;
    }

    // Exact division by (t^2 - 1): solves (t^2-1) q = *this by the descending
    // recurrence q_{j-2} = s_j + q_j. For exact inputs the result is computed
    // down to `floor_hint`; for inexact inputs down to low()-2.
    SeriesInf div_t2m1(int floor_hint = 0) const {
        SeriesInf r;
        r.exact_ = false;
        const int out_top = top() - 2;
        const int out_low = exact_ ? std::min(floor_hint, out_top) : low_ - 2;
        r.low_ = out_low;
        if (out_top < out_low) return r;
        r.c_.assign(static_cast<size_t>(out_top - out_low + 1), C{});
        C q_jp2{};  // q at exponent j+2 (zero above out_top)
        C q_jp1{};
        // iterate j from out_top down to out_low: q_j = s_{j+2} + q_{j+2}
        for (int j = out_top; j >= out_low; j--) {
            C v = (j + 2 >= low_ || exact_) ? coeff(j + 2) : C{};
            v += q_jp2;
            q_jp2 = std::move(q_jp1);
            q_jp1 = v;
            r.c_[static_cast<size_t>(j - out_low)] = q_jp1;
        }
        r.trim();
        return r;
    }

    // Raise the floor (forget deeper coefficients). Keeps exactness only when
    // nothing nonzero is cut.
    SeriesInf truncated(int new_low) const {
        if (new_low <= low_) return *this;
        SeriesInf r;
        r.low_ = new_low;
        bool cut_nonzero = false;
        for (size_t i = 0; i < c_.size(); i++) {
            if (low_ + static_cast<int>(i) < new_low) {
                if (!ring_is_zero(c_[i])) cut_nonzero = true;
            } else {
                r.c_.push_back(c_[i]);
            }
        }
        if (new_low > top() + 1) r.c_.clear();
        r.exact_ = exact_ && !cut_nonzero;
        r.trim();
        return r;
    }

    friend bool operator==(const SeriesInf& a, const SeriesInf& b) {
        if (a.exact_ != b.exact_ || a.low_ != b.low_) return false;
        return a.c_ == b.c_;
    }

    // Equality of all coefficients on the intersection of known windows.
    friend bool agree_on_overlap(const SeriesInf& a, const SeriesInf& b) {
        const int floor_shared = std::min(a.low_, b.low_);
        const int fa = a.exact_ ? floor_shared : a.low_;
        const int fb = b.exact_ ? floor_shared : b.low_;
        const int lo = std::max(fa, fb);
        const int hi = std::max(a.top(), b.top());
        for (int e = lo; e <= hi; e++)
            if (!(a.coeff(e) == b.coeff(e))) return false;
        return true;
    }

    std::string str(int max_terms = 12) const {
        std::string out;
        int shown = 0;
        for (int e = top(); e >= low_ && shown < max_terms; e--) {
            const C& v = coeff(e);
            if (ring_is_zero(v)) continue;
            if (!out.empty()) out += " + ";
            out += "(" + ring_str(v) + ")*t^" + std::to_string(e);
            shown++;
        }
        if (out.empty()) out = "0";
        if (!exact_) out += " + O(t^" + std::to_string(low_ - 1) + ")";
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
        if (c_.empty() && exact_) low_ = 1;
    }

    int low_;
    std::vector<C> c_;
    bool exact_;
};

using RSeries = SeriesInf<Rational>;
using ASeries = SeriesInf<AlphaPoly>;

// coefficient of t^exp in a*b without forming the product; validates that the
// coefficient is within the product's known window.
template <class C>
C product_coefficient(const SeriesInf<C>& a, const SeriesInf<C>& b, int exp) {
    if (!a.exact() && exp < a.low() + b.top())
        throw TruncationError("product_coefficient: left factor window too short");
    if (!b.exact() && exp < b.low() + a.top())
        throw TruncationError("product_coefficient: right factor window too short");
    // It suffices to scan a's stored window: above it a is exactly zero, and
    // below it either a is exact (zero again) or, by the validation above,
    // the matching b-coefficient is above b.top() and hence exactly zero.
    C acc{};
    for (int i = a.low(); i <= a.top(); i++) {
        const C& ai = a.coeff(i);
        if (ring_is_zero(ai)) continue;
        const int j = exp - i;
        if (j > b.top()) continue;
        if (j < b.low()) {
            if (b.exact()) continue;
            throw TruncationError("product_coefficient: internal window violation");
        }
        acc += ai * b.coeff(j);
    }
    return acc;
}

// arctanh(1/t) = sum_{k>=0} t^-(2k+1)/(2k+1), known window down to -T.
RSeries series_arctanh_inv_t(int T);

// arctanh(1/t)^j for j = 0..4 via the first-order ODE they satisfy;
// cross-checked against plain convolution in the tests.
RSeries arctanh_power(int j, int T);

// series of 1/(t^2-1) down to -T
RSeries inv_t2m1_series(int T);

// Assemble an alpha-polynomial series from per-degree components.
ASeries alpha_combine(const RSeries& a0, const RSeries& a1, const RSeries& a2, const RSeries& a3);
RSeries alpha_component(const ASeries& s, int j);
ASeries to_alpha(const RSeries& s);

}  // namespace trigpot

#endif
