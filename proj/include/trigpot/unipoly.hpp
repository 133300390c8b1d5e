#ifndef TRIGPOT_UNIPOLY_HPP
#define TRIGPOT_UNIPOLY_HPP

#include "trigpot/errors.hpp"
#include "trigpot/ring.hpp"
#include "trigpot/tower.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace trigpot {

// Dense univariate polynomial over a generic ring R, lowest degree first.
// Invariant: no trailing zero coefficient (zero polynomial = empty vector).
template <class R>
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(std::initializer_list<R> cs) : c_(cs) { trim(); }
    explicit UniPoly(std::vector<R> cs) : c_(std::move(cs)) { trim(); }
    explicit UniPoly(R c) { c_.push_back(std::move(c)); trim(); }

    static UniPoly zero() { return {}; }
    static UniPoly one() { return UniPoly(ring_one<R>()); }
    static UniPoly x() { return monomial(ring_one<R>(), 1); }
    static UniPoly monomial(R c, size_t k) {
        UniPoly p;
        if (!ring_is_zero(c)) {
            p.c_.assign(k + 1, R{});
            p.c_[k] = std::move(c);
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    size_t size() const { return c_.size(); }
    const std::vector<R>& coeffs() const { return c_; }

    const R& lc() const {
        if (is_zero()) throw MathError("UniPoly: lc of zero polynomial");
        return c_.back();
    }
    R coeff(size_t i) const { return i < c_.size() ? c_[i] : R{}; }
    void set_coeff(size_t i, R v) {
        if (i >= c_.size()) c_.resize(i + 1, R{});
        c_[i] = std::move(v);
        trim();
    }

    UniPoly operator-() const {
        UniPoly p = *this;
        for (auto& v : p.c_) v = -v;
        return p;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), R{});
        for (size_t i = 0; i < r.c_.size(); i++) {
            if (i < a.c_.size()) r.c_[i] = a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UniPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, R{});
        for (size_t i = 0; i < a.c_.size(); i++) {
            if (ring_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); j++) {
                if (ring_is_zero(b.c_[j])) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly scaled(const R& s) const {
        if (ring_is_zero(s)) return {};
        UniPoly p = *this;
        for (auto& v : p.c_) v = v * s;
        p.trim();
        return p;
    }

    UniPoly shifted_up(size_t k) const {  // multiply by x^k
        if (is_zero() || k == 0) return *this;
        UniPoly p;
        p.c_.assign(c_.size() + k, R{});
        for (size_t i = 0; i < c_.size(); i++) p.c_[i + k] = c_[i];
        return p;
    }

    UniPoly pow(unsigned e) const {
        UniPoly r = one();
        UniPoly b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    UniPoly derivative() const {
        if (degree() <= 0) return {};
        UniPoly d;
        d.c_.reserve(c_.size() - 1);
        R k = ring_one<R>();
        for (size_t i = 1; i < c_.size(); i++) {
            d.c_.push_back(c_[i] * k);
            k += ring_one<R>();
        }
        d.trim();
        return d;
    }

    // Horner evaluation at a point of the same ring.
    R eval(const R& x) const {
        R acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Evaluation into another ring via a coefficient converter.
    template <class S, class Conv>
    S eval_mapped(const S& x, Conv conv) const {
        S acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + conv(c_[i]);
        return acc;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (ring_is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            out += ring_str(c_[i]);
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }

  private:
    std::vector<R> c_;
};

// ---- ring protocol for nested use ----
template <class R>
bool ring_is_zero(const UniPoly<R>& p) { return p.is_zero(); }

template <class R>
std::string ring_str(const UniPoly<R>& p) { return "(" + p.str() + ")"; }

// ---- exact division in the coefficient ring ----
inline Rational divexact_ring(const Rational& a, const Rational& b) { return a / b; }

template <class F>
Gaussian<F> divexact_ring(const Gaussian<F>& a, const Gaussian<F>& b) { return a / b; }

// Exact polynomial division; throws MathError if b does not divide a.
template <class R>
UniPoly<R> divexact_ring(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (b.is_zero()) throw MathError("UniPoly: division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw MathError("UniPoly: non-exact division (degree)");
    std::vector<R> q(static_cast<size_t>(a.degree() - b.degree()) + 1, R{});
    UniPoly<R> rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const size_t k = static_cast<size_t>(rem.degree() - b.degree());
        R qc = divexact_ring(rem.lc(), b.lc());
        q[k] = qc;
        rem -= b.shifted_up(k).scaled(qc);
        if (!rem.is_zero() && rem.degree() == static_cast<int>(k) + b.degree())
            throw MathError("UniPoly: non-exact division (leading term did not cancel)");
    }
    if (!rem.is_zero()) throw MathError("UniPoly: non-exact division (remainder)");
    return UniPoly<R>(std::move(q));
}

// Quotient/remainder over a field.
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> div_qr(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (b.is_zero()) throw MathError("UniPoly: division by zero polynomial");
    UniPoly<R> q, rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const size_t k = static_cast<size_t>(rem.degree() - b.degree());
        R qc = rem.lc() / b.lc();
        q += UniPoly<R>::monomial(qc, k);
        rem -= b.shifted_up(k).scaled(qc);
    }
    return {q, rem};
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r, returns r.
template <class R>
UniPoly<R> prem(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (b.is_zero()) throw MathError("UniPoly: prem by zero");
    UniPoly<R> r = a;
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const size_t k = static_cast<size_t>(r.degree() - b.degree());
        r = r.scaled(b.lc()) - b.shifted_up(k).scaled(r.lc());
        e--;
    }
    if (e > 0) {
        R f = ring_one<R>();
        for (int i = 0; i < e; i++) f = f * b.lc();
        r = r.scaled(f);
    }
    return r;
}

// Resultant w.r.t. the polynomial variable, subresultant PRS (fraction-free).
// Convention: res(p, q) = lc(p)^deg(q) * prod_{p(a)=0} q(a), i.e. the Sylvester
// determinant with the rows of p's coefficients first.
template <class R>
R resultant(UniPoly<R> A, UniPoly<R> B) {
    if (A.is_zero() || B.is_zero()) throw MathError("resultant: zero polynomial input");
    bool neg = false;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) neg = !neg;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        // res(A, c) = c^deg(A)
        R r = ring_one<R>();
        for (int i = 0; i < A.degree(); i++) r = r * B.lc();
        return neg ? -r : r;
    }
    R g = ring_one<R>();
    R h = ring_one<R>();
    while (true) {
        const int d = A.degree(), e = B.degree();
        const int delta = d - e;
        if ((d & 1) && (e & 1)) neg = !neg;
        UniPoly<R> rem = prem(A, B);
        if (rem.is_zero()) return R{};  // common factor (e >= 1 here)
        // divide rem by g*h^delta, exactly
        R div = g;
        for (int i = 0; i < delta; i++) div = div * h;
        A = B;
        {
            std::vector<R> cc;
            cc.reserve(rem.size());
            for (size_t i = 0; i < rem.size(); i++) cc.push_back(divexact_ring(rem.coeff(i), div));
            B = UniPoly<R>(std::move(cc));
        }
        g = A.lc();
        // h = h^(1-delta) * g^delta
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            R num = ring_one<R>();
            for (int i = 0; i < delta; i++) num = num * g;
            R den = ring_one<R>();
            for (int i = 0; i < delta - 1; i++) den = den * h;
            h = divexact_ring(num, den);
        }
        if (B.degree() == 0) {
            // final step: res = s * h^(1-deg A) * lc(B)^deg A
            const int dA = A.degree();
            R num = ring_one<R>();
            for (int i = 0; i < dA; i++) num = num * B.lc();
            if (dA > 1) {
                R den = ring_one<R>();
                for (int i = 0; i < dA - 1; i++) den = den * h;
                num = divexact_ring(num, den);
            }
            return neg ? -num : num;
        }
    }
}

// Reference implementation: Bareiss determinant of the Sylvester matrix.
// Used by tests to pin the PRS resultant's sign and value.
template <class R>
R sylvester_resultant(const UniPoly<R>& p, const UniPoly<R>& q) {
    if (p.is_zero() || q.is_zero()) throw MathError("resultant: zero polynomial input");
    const int m = p.degree(), n = q.degree();
    const int N = m + n;
    if (N == 0) return ring_one<R>();
    std::vector<std::vector<R>> M(static_cast<size_t>(N), std::vector<R>(static_cast<size_t>(N), R{}));
    for (int r = 0; r < n; r++)
        for (int j = 0; j <= m; j++) M[r][r + j] = p.coeff(static_cast<size_t>(m - j));
    for (int r = 0; r < m; r++)
        for (int j = 0; j <= n; j++) M[n + r][r + j] = q.coeff(static_cast<size_t>(n - j));
    // Bareiss fraction-free elimination with row pivoting (sign tracked).
    bool neg = false;
    R prev = ring_one<R>();
    for (int k = 0; k < N - 1; k++) {
        if (ring_is_zero(M[k][k])) {
            int piv = -1;
            for (int r = k + 1; r < N; r++)
                if (!ring_is_zero(M[r][k])) { piv = r; break; }
            if (piv < 0) return R{};
            std::swap(M[k], M[piv]);
            neg = !neg;
        }
        for (int i = k + 1; i < N; i++) {
            for (int j = k + 1; j < N; j++) {
                R v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = divexact_ring(v, prev);
            }
            M[i][k] = R{};
        }
        prev = M[k][k];
    }
    R det = M[N - 1][N - 1];
    return neg ? -det : det;
}

// ---- Rational-coefficient helpers ----

// gcd for Rational-coefficient polynomials, monic result.
inline UniPoly<Rational> poly_gcd(UniPoly<Rational> a, UniPoly<Rational> b) {
    while (!b.is_zero()) {
        auto [q, r] = div_qr(a, b);
        a = b;
        b = r;
        if (!b.is_zero()) b = b.scaled(b.lc().inv());  // keep sizes in check
    }
    if (a.is_zero()) return a;
    return a.scaled(a.lc().inv());
}

inline UniPoly<Rational> squarefree_part(const UniPoly<Rational>& p) {
    if (p.degree() <= 1) return p;
    const auto g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return divexact_ring(p, g);
}

// Clear denominators and divide by integer content; sign of lc preserved.
// Returns primitive integer-coefficient polynomial as UniPoly<Rational>.
inline UniPoly<Rational> primitive_integer_part(const UniPoly<Rational>& p) {
    if (p.is_zero()) return p;
    Integer lcm_den = 1;
    for (const auto& c : p.coeffs()) {
        Integer d = c.den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer n = c.num() * lcm_den / c.den();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) g = 1;
    std::vector<Rational> cc;
    cc.reserve(p.size());
    for (const auto& c : p.coeffs()) cc.emplace_back(c * Rational(lcm_den, 1) / Rational(g, 1));
    return UniPoly<Rational>(std::move(cc));
}

}  // namespace trigpot

#endif
