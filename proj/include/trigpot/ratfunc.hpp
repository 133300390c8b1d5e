#ifndef TRIGPOT_RATFUNC_HPP
#define TRIGPOT_RATFUNC_HPP

#include "trigpot/rational.hpp"
#include "trigpot/unipoly.hpp"

namespace trigpot {

// Rational function num/den over Q in one variable, gcd-reduced with monic
// denominator.
class RatFunc {
  public:
    RatFunc() : num_(), den_(UniPoly<Rational>::one()) {}
    RatFunc(Rational c) : num_(UniPoly<Rational>(c)), den_(UniPoly<Rational>::one()) {}  // NOLINT
    explicit RatFunc(UniPoly<Rational> num) : num_(std::move(num)), den_(UniPoly<Rational>::one()) {}
    RatFunc(UniPoly<Rational> num, UniPoly<Rational> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw MathError("RatFunc: zero denominator");
        reduce();
    }

    static RatFunc one() { return RatFunc(Rational(1)); }
    static RatFunc var() { return RatFunc(UniPoly<Rational>::x()); }

    const UniPoly<Rational>& num() const { return num_; }
    const UniPoly<Rational>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const { return RatFunc(checked{}, -num_, den_); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw MathError("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // Defined only where den(x) != 0.
    Rational eval(const Rational& x) const {
        const Rational d = den_.eval(x);
        if (d.is_zero()) throw MathError("RatFunc: pole at evaluation point");
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var = "n") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

  private:
    struct checked {};
    RatFunc(checked, UniPoly<Rational> n, UniPoly<Rational> d) : num_(std::move(n)), den_(std::move(d)) {}
    void reduce() {
        if (num_.is_zero()) {
            den_ = UniPoly<Rational>::one();
            return;
        }
        const auto g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divexact_ring(num_, g);
            den_ = divexact_ring(den_, g);
        }
        const Rational s = den_.lc().inv();
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }

    UniPoly<Rational> num_;
    UniPoly<Rational> den_;
};

inline std::string ring_str(const RatFunc& f) { return f.str(); }

}  // namespace trigpot

#endif
