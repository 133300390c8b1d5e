#ifndef TRIGPOT_RATIONAL_HPP
#define TRIGPOT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trigpot {

using Integer = mpz_class;

// Exact rational number, always kept canonical: gcd(|num|, den) = 1, den > 0.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                       // NOLINT(hicpp-explicit-conversions)
    Rational(long n, long d) : q_(n, d) { canonical(); }
    Rational(Integer n) : q_(std::move(n)) {}         // NOLINT(hicpp-explicit-conversions)
    Rational(const Integer& n, const Integer& d) : q_(n, d) { canonical(); }
    explicit Rational(mpq_class q) : q_(std::move(q)) { canonical(); }

    // Parses "p/q" or "p" (decimal). Throws std::invalid_argument on junk.
    static Rational parse(std::string_view s);

    const mpq_class& raw() const { return q_; }
    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(wrap{}, -q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(wrap{}, 1 / q_);
    }

    Rational pow(unsigned long e) const;

    // Serialization: "p/q", or "p" when q = 1; minus sign on p only.
    std::string str() const;
    // Decimal rendering for display fields only (never used in certified data).
    double approx() const { return q_.get_d(); }

  private:
    struct wrap {};
    Rational(wrap, mpq_class q) : q_(std::move(q)) {}  // already canonical
    void canonical() { q_.canonicalize(); }
    mpq_class q_;
};

inline Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q_.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q_.get_mpq_t()), e);
    return Rational(wrap{}, r);
}

inline std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

inline Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    const auto slash = s.find('/');
    auto check_int = [](std::string_view t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); i++)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (slash == std::string_view::npos) {
        if (!check_int(s)) throw std::invalid_argument("Rational::parse: bad integer '" + std::string(s) + "'");
        return Rational(Integer(std::string(s)));
    }
    const auto p = s.substr(0, slash);
    const auto q = s.substr(slash + 1);
    if (!check_int(p) || !check_int(q)) throw std::invalid_argument("Rational::parse: bad rational '" + std::string(s) + "'");
    Integer den{std::string(q)};
    if (sgn(den) == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(Integer(std::string(p)), den);
}

inline Rational abs(const Rational& r) { return r.abs(); }

// exact n! as Integer
inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer pow_int(long base, unsigned long e) {
    Integer b(base), out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

inline Integer binomial_int(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace trigpot

#endif
