#ifndef TRIGPOT_LEGENDRE_HPP
#define TRIGPOT_LEGENDRE_HPP

#include "trigpot/rational.hpp"
#include "trigpot/series.hpp"
#include "trigpot/unipoly.hpp"

namespace trigpot {

// Solutions of (t^2-1) y'' + 4t y' - (n-1)(n+2) y = 0.
//
// P_n is the polynomial solution from the Rodrigues-type construction
//   P_n = (t^2-1)^-1 d^(n-1)/dt^(n-1) (t^2-1)^n          (n >= 1),
// P_0 = t/(t^2-1) held structurally. Q_n is the decaying second solution,
// normalized by Q_n = P_n * Int (t^2-1)^-2 P_n^-2 dt with the antiderivative
// vanishing at infinity; then
//   Q_n = eps_n * (P_n * arctanh(1/t) + V_n/(t^2-1)),
// with eps_n = n(n+1)/(4^n (n!)^2) and polynomials V_n. P_n, Q_n/eps_n and
// V_n all satisfy the three-term recurrence
//   4n(n+1)(n+2) y_n - 2t(n+2)(2n+3) y_{n+1} + (n+3) y_{n+2} = 0.

struct LegendreP {
    int n = 0;
    UniPoly<Rational> poly;  // valid for n >= 1
    bool structural_p0 = false;

    RSeries series(int T) const;
};

struct LegendreQSeries {
    int n = 0;
    Rational eps;             // eps_n for n >= 1; unused for the structural n = 0
    RSeries series;           // expansion at infinity, floor <= -T
    UniPoly<Rational> v;      // V_n for n >= 1 (empty for n = 0)
};

// Rodrigues construction; the division by (t^2-1) is verified exact.
LegendreP p_poly(int n);

// eps_n = n(n+1)/(4^n (n!)^2), n >= 1.
Rational epsilon(int n);

// V_n polynomial (cached), n >= 1.
UniPoly<Rational> v_poly(int n);

// Q_n as a series to order T (floor -T at least), built by iterating the
// three-term recurrence on series from the closed forms of Q_1 and Q_2;
// Q_0 = 1/(t^2-1) structurally. Requires T >= n + 4.
LegendreQSeries q_series(int n, int T);

// eps_n*(P_n*A + V_n/(t^2-1)) -- must agree with q_series; the residue
// oracles assert this on every call they make.
RSeries q_series_structural(int n, int T);

// P_n Q_n' - P_n' Q_n == (t^2-1)^-2 coefficientwise on the known window.
bool verify_wronskian(int n, int T);

// residual of (t^2-1) y'' + 4t y' - (n-1)(n+2) y for a candidate series
RSeries ode_residual(const RSeries& y, int n);

}  // namespace trigpot

#endif
