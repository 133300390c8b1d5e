#include "trigpot/legendre.hpp"

#include "trigpot/errors.hpp"

#include <mutex>
#include <vector>

namespace trigpot {

RSeries LegendreP::series(int T) const {
    if (structural_p0) {
        // t/(t^2-1) = t^-1 + t^-3 + ...
        return inv_t2m1_series(T + 1).shifted(1);
    }
    return RSeries::from_poly(poly);
}

LegendreP p_poly(int n) {
    if (n < 0) throw MathError("p_poly: n must be >= 0");
    if (n == 0) return LegendreP{0, {}, true};
    const UniPoly<Rational> t2m1{Rational(-1), Rational(0), Rational(1)};
    UniPoly<Rational> w = t2m1.pow(static_cast<unsigned>(n));
    for (int i = 0; i < n - 1; i++) w = w.derivative();
    return LegendreP{n, divexact_ring(w, t2m1), false};
}

Rational epsilon(int n) {
    if (n < 1) throw MathError("epsilon: n must be >= 1 (Q_0 is structural)");
    const Integer f = factorial(static_cast<unsigned long>(n));
    return Rational(Integer(static_cast<long>(n) * (static_cast<long>(n) + 1)),
                    pow_int(4, static_cast<unsigned long>(n)) * f * f);
}

namespace {

std::mutex v_mutex;
std::vector<UniPoly<Rational>> v_cache;  // v_cache[k] = V_{k+1}

}  // namespace

UniPoly<Rational> v_poly(int n) {
    if (n < 1) throw MathError("v_poly: n must be >= 1");
    std::lock_guard<std::mutex> lock(v_mutex);
    if (v_cache.empty()) {
        v_cache.push_back(UniPoly<Rational>{Rational(0), Rational(-1)});                  // V_1 = -t
        v_cache.push_back(UniPoly<Rational>{Rational(8, 3), Rational(0), Rational(-4)});  // V_2 = (8-12t^2)/3
    }
    while (static_cast<int>(v_cache.size()) < n) {
        const int m = static_cast<int>(v_cache.size()) - 1;  // producing V_{m+2}
        const auto& vm = v_cache[static_cast<size_t>(m - 1)];
        const auto& vm1 = v_cache[static_cast<size_t>(m)];
        // V_{m+2} = (2t(m+2)(2m+3) V_{m+1} - 4m(m+1)(m+2) V_m) / (m+3)
        UniPoly<Rational> next =
            vm1.shifted_up(1).scaled(Rational(2L * (m + 2) * (2 * m + 3))) -
            vm.scaled(Rational(4L * m * (m + 1) * (m + 2)));
        next = next.scaled(Rational(1, m + 3));
        v_cache.push_back(std::move(next));
    }
    return v_cache[static_cast<size_t>(n - 1)];
}

namespace {

// Q_1/eps_1 and Q_2/eps_2 as series with floor -T.
RSeries qtilde1(int T) {
    // 2*Q_1 = A - t/(t^2-1)
    const RSeries a = series_arctanh_inv_t(T);
    const RSeries t_over = inv_t2m1_series(T + 1).shifted(1);
    return a - t_over;
}

RSeries qtilde2(int T) {
    // (32/3)*Q_2 = 4t*A - 8/3 - (4/3) t^2/(t^2-1);  t^2/(t^2-1) = 1 + 1/(t^2-1)
    const RSeries a = series_arctanh_inv_t(T + 1);
    RSeries r = a.shifted(1).scaled(Rational(4));
    r -= RSeries::monomial(Rational(8, 3), 0);
    r -= (RSeries::monomial(Rational(1), 0) + inv_t2m1_series(T + 2)).scaled(Rational(4, 3));
    return r;
}

}  // namespace

LegendreQSeries q_series(int n, int T) {
    if (n < 0) throw MathError("q_series: n must be >= 0");
    if (T < n + 4) throw MathError("q_series: T too small to represent the leading term");
    if (n == 0) return LegendreQSeries{0, Rational(0), inv_t2m1_series(T), {}};

    const int T0 = T + (n > 2 ? n - 2 : 0) + 2;
    RSeries qa = qtilde1(T0);
    if (n == 1) return LegendreQSeries{1, epsilon(1), qa.scaled(epsilon(1)).truncated(-T0), v_poly(1)};
    RSeries qb = qtilde2(T0);
    for (int m = 1; m + 2 <= n; m++) {
        // Qt_{m+2} = (2t(m+2)(2m+3) Qt_{m+1} - 4m(m+1)(m+2) Qt_m) / (m+3)
        RSeries next = qb.shifted(1).scaled(Rational(2L * (m + 2) * (2 * m + 3))) -
                       qa.scaled(Rational(4L * m * (m + 1) * (m + 2)));
        next = next.scaled(Rational(1, m + 3));
        qa = std::move(qb);
        qb = std::move(next);
    }
    return LegendreQSeries{n, epsilon(n), qb.scaled(epsilon(n)), v_poly(n)};
}

RSeries q_series_structural(int n, int T) {
    if (n < 1) throw MathError("q_series_structural: n must be >= 1");
    const LegendreP p = p_poly(n);
    const RSeries pa = RSeries::from_poly(p.poly) * arctanh_power(1, T + p.poly.degree() + 2);
    const RSeries r = RSeries::from_poly(v_poly(n)).div_t2m1(-T - 2);
    return (pa + r).scaled(epsilon(n)).truncated(-T - 1);
}

bool verify_wronskian(int n, int T) {
    if (n < 0) throw MathError("verify_wronskian: n must be >= 0");
    RSeries p, q;
    if (n == 0) {
        p = inv_t2m1_series(T + 1).shifted(1);
        q = inv_t2m1_series(T);
    } else {
        p = RSeries::from_poly(p_poly(n).poly);
        q = q_series(n, T).series;
    }
    const RSeries w = p * q.derivative() - p.derivative() * q;
    // target (t^2-1)^-2 to the window of w
    const RSeries target = inv_t2m1_series(2 - w.low()).div_t2m1(w.low());
    return agree_on_overlap(w, target);
}

RSeries ode_residual(const RSeries& y, int n) {
    const UniPoly<Rational> t2m1{Rational(-1), Rational(0), Rational(1)};
    const RSeries ypp = y.derivative().derivative();
    const RSeries yp = y.derivative();
    return RSeries::from_poly(t2m1) * ypp + yp.shifted(1).scaled(Rational(4)) -
           y.scaled(Rational(static_cast<long>(n - 1) * (n + 2)));
}

}  // namespace trigpot
