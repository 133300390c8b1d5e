#ifndef TRIGPOT_TOWER_HPP
#define TRIGPOT_TOWER_HPP

#include "trigpot/errors.hpp"
#include "trigpot/ring.hpp"

#include <string>
#include <utility>

namespace trigpot {

// re + i*im over a base field F.
template <class F>
class Gaussian {
  public:
    Gaussian() = default;
    Gaussian(F re) : re_(std::move(re)) {}  // NOLINT(hicpp-explicit-conversions)
    Gaussian(F re, F im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian one() { return Gaussian(ring_one<F>()); }
    static Gaussian i() { return Gaussian(F{}, ring_one<F>()); }

    const F& re() const { return re_; }
    const F& im() const { return im_; }

    bool is_zero() const { return ring_is_zero(re_) && ring_is_zero(im_); }
    bool is_real() const { return ring_is_zero(im_); }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    F norm() const { return re_ * re_ + im_ * im_; }

    Gaussian operator-() const { return Gaussian(-re_, -im_); }
    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        if (b.is_zero()) throw MathError("Gaussian: division by zero");
        const F n = b.norm();
        const Gaussian t = a * b.conj();
        return Gaussian(t.re_ / n, t.im_ / n);
    }
    Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
    Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    std::string str() const {
        if (is_real()) return ring_str(re_);
        return "(" + ring_str(re_) + "+" + ring_str(im_) + "i)";
    }

  private:
    F re_{};
    F im_{};
};

// x + y*sqrt(d) over a base field F; d is a fixed non-square of F attached to
// each value. Mixing two values with different d is a tower error.
template <class F>
class QuadExt {
  public:
    QuadExt() = default;
    QuadExt(F x) : x_(std::move(x)) {}  // NOLINT(hicpp-explicit-conversions)
    QuadExt(F x, F y, F d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
        if (ring_is_zero(y_)) d_ = F{};
    }

    static QuadExt one() { return QuadExt(ring_one<F>()); }
    static QuadExt sqrt_d(F d) { return QuadExt(F{}, ring_one<F>(), std::move(d)); }

    const F& x() const { return x_; }
    const F& y() const { return y_; }
    const F& d() const { return d_; }

    bool is_zero() const { return ring_is_zero(x_) && ring_is_zero(y_); }
    bool is_base() const { return ring_is_zero(y_); }

    QuadExt conj() const { return QuadExt(x_, -y_, d_); }
    F norm() const { return x_ * x_ - d_ * y_ * y_; }

    QuadExt operator-() const { return QuadExt(-x_, -y_, d_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        const F d = merge(a, b);
        return QuadExt(a.x_ + b.x_, a.y_ + b.y_, d);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        const F d = merge(a, b);
        return QuadExt(a.x_ - b.x_, a.y_ - b.y_, d);
    }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        const F d = merge(a, b);
        return QuadExt(a.x_ * b.x_ + d * (a.y_ * b.y_), a.x_ * b.y_ + a.y_ * b.x_, d);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        if (b.is_zero()) throw MathError("QuadExt: division by zero");
        const F d = merge(a, b);
        const F n = b.norm();
        if (ring_is_zero(n)) throw MathError("QuadExt: divisor has zero norm (d is a square?)");
        const QuadExt t = a * b.conj();
        return QuadExt(t.x_ / n, t.y_ / n, d);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.x_ != b.x_ || a.y_ != b.y_) return false;
        if (ring_is_zero(a.y_)) return true;
        return a.d_ == b.d_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    std::string str() const {
        if (is_base()) return ring_str(x_);
        return "(" + ring_str(x_) + "+" + ring_str(y_) + "*sqrt(" + ring_str(d_) + "))";
    }

  private:
    static F merge(const QuadExt& a, const QuadExt& b) {
        if (ring_is_zero(a.y_)) return b.d_;
        if (ring_is_zero(b.y_)) return a.d_;
        if (!(a.d_ == b.d_))
            throw TowerOverflowError("QuadExt: mixing incompatible square roots");
        return a.d_;
    }

    F x_{};
    F y_{};
    F d_{};
};

}  // namespace trigpot

#endif
