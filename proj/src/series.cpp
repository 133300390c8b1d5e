#include "trigpot/series.hpp"

namespace trigpot {

RSeries series_arctanh_inv_t(int T) {
    if (T < 1) throw MathError("series_arctanh_inv_t: T must be >= 1");
    std::vector<Rational> desc(static_cast<size_t>(T), Rational(0));  // exponents -1 .. -T
    for (int k = 0; 2 * k + 1 <= T; k++) desc[static_cast<size_t>(2 * k)] = Rational(1, 2 * k + 1);
    return RSeries::from_coeffs(-1, std::move(desc), false);
}

// Powers of A = arctanh(1/t) from (1-u^2) dA^m/du = m A^(m-1) in u = 1/t,
// which couples consecutive coefficients only.
RSeries arctanh_power(int j, int T) {
    if (j < 0 || j > 4) throw MathError("arctanh_power: exponent out of range");
    if (T < 1) throw MathError("arctanh_power: T must be >= 1");
    if (j == 0) {
        RSeries one = RSeries::monomial(Rational(1), 0);
        return one;
    }
    if (j == 1) return series_arctanh_inv_t(T);

    const size_t kmax = static_cast<size_t>(T / 2) + 1;
    // a_k = [u^(2k+1)] A = 1/(2k+1)
    // b_k = [u^(2k)]  A^2 : b_{k+1} = (k b_k + a_k)/(k+1),            b_0 = 0
    // c_k = [u^(2k+1)] A^3 : c_k = ((2k-1) c_{k-1} + 3 b_k)/(2k+1),   c_0 = 0
    // d_k = [u^(2k)]  A^4 : d_{k+1} = (k d_k + 2 c_k)/(k+1),          d_0 = 0
    std::vector<Rational> b(kmax + 1, Rational(0));
    for (size_t k = 0; k < kmax; k++)
        b[k + 1] = (Rational(static_cast<long>(k)) * b[k] + Rational(1, 2 * static_cast<long>(k) + 1)) /
                   Rational(static_cast<long>(k) + 1);
    if (j == 2) {
        std::vector<Rational> desc(static_cast<size_t>(T - 1), Rational(0));  // exponents -2 .. -T
        for (size_t k = 1; 2 * k <= static_cast<size_t>(T); k++)
            desc[2 * k - 2] = b[k];
        return RSeries::from_coeffs(-2, std::move(desc), false);
    }
    std::vector<Rational> c(kmax + 1, Rational(0));
    for (size_t k = 1; k <= kmax; k++)
        c[k] = (Rational(2 * static_cast<long>(k) - 1) * c[k - 1] + Rational(3) * b[k]) /
               Rational(2 * static_cast<long>(k) + 1);
    if (j == 3) {
        if (T < 3) return RSeries::from_coeffs(-3, {}, false);
        std::vector<Rational> desc(static_cast<size_t>(T - 2), Rational(0));  // exponents -3 .. -T
        for (size_t k = 1; 2 * k + 1 <= static_cast<size_t>(T); k++)
            desc[2 * k - 2] = c[k];
        return RSeries::from_coeffs(-3, std::move(desc), false);
    }
    std::vector<Rational> d(kmax + 1, Rational(0));
    for (size_t k = 0; k < kmax; k++)
        d[k + 1] = (Rational(static_cast<long>(k)) * d[k] + Rational(2) * c[k]) /
                   Rational(static_cast<long>(k) + 1);
    if (T < 4) return RSeries::from_coeffs(-4, {}, false);
    std::vector<Rational> desc(static_cast<size_t>(T - 3), Rational(0));  // exponents -4 .. -T
    for (size_t k = 2; 2 * k <= static_cast<size_t>(T); k++)
        desc[2 * k - 4] = d[k];
    return RSeries::from_coeffs(-4, std::move(desc), false);
}

RSeries inv_t2m1_series(int T) {
    // 1/(t^2-1) = sum_{k>=1} t^(-2k)
    if (T < 2) return RSeries::from_coeffs(-2, {}, false);
    std::vector<Rational> desc(static_cast<size_t>(T - 1), Rational(0));  // exponents -2 .. -T
    for (int k = 1; 2 * k <= T; k++) desc[static_cast<size_t>(2 * k - 2)] = Rational(1);
    return RSeries::from_coeffs(-2, std::move(desc), false);
}

ASeries alpha_combine(const RSeries& a0, const RSeries& a1, const RSeries& a2, const RSeries& a3) {
    const RSeries* parts[4] = {&a0, &a1, &a2, &a3};
    bool exact = true;
    int lo = std::numeric_limits<int>::min();
    int hi = std::numeric_limits<int>::min();
    for (const auto* p : parts) {
        if (!p->exact()) {
            exact = false;
            lo = std::max(lo, p->low());
        }
        hi = std::max(hi, p->top());
    }
    if (exact) {
        lo = std::numeric_limits<int>::max();
        for (const auto* p : parts)
            if (!p->known_zero()) lo = std::min(lo, p->low());
        if (lo == std::numeric_limits<int>::max()) return ASeries();
    }
    if (hi < lo) return ASeries::from_coeffs(lo - 1, {}, exact);
    std::vector<AlphaPoly> desc;
    desc.reserve(static_cast<size_t>(hi - lo + 1));
    for (int e = hi; e >= lo; e--) {
        AlphaPoly v;
        for (int jj = 0; jj < 4; jj++) {
            const RSeries& p = *parts[jj];
            if (e >= p.low() || p.exact()) v[static_cast<size_t>(jj)] = p.coeff(e);
        }
        desc.push_back(std::move(v));
    }
    return ASeries::from_coeffs(hi, std::move(desc), exact);
}

RSeries alpha_component(const ASeries& s, int j) {
    std::vector<Rational> desc;
    desc.reserve(s.stored_size());
    for (int e = s.top(); e >= s.low(); e--) desc.push_back(s.coeff(e)[static_cast<size_t>(j)]);
    return RSeries::from_coeffs(s.top(), std::move(desc), s.exact());
}

ASeries to_alpha(const RSeries& s) {
    std::vector<AlphaPoly> desc;
    desc.reserve(s.stored_size());
    for (int e = s.top(); e >= s.low(); e--) desc.push_back(AlphaPoly(s.coeff(e)));
    return ASeries::from_coeffs(s.top(), std::move(desc), s.exact());
}

}  // namespace trigpot
