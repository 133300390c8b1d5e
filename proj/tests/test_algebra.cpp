#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trigpot/matrix.hpp"
#include "trigpot/ratfunc.hpp"
#include "trigpot/rational.hpp"
#include "trigpot/root_isolation.hpp"
#include "trigpot/sign_certify.hpp"
#include "trigpot/tower.hpp"
#include "trigpot/unipoly.hpp"

#include <random>

using namespace trigpot;

namespace {

std::mt19937 rng(20240911);

Rational rand_rational() {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    return Rational(num(rng), den(rng));
}

UniPoly<Rational> rand_poly(int maxdeg) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    const int deg = d(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= deg; i++) c.push_back(rand_rational());
    return UniPoly<Rational>(std::move(c));
}

}  // namespace

TEST_CASE("rational basics and serialization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational::parse("16/1155") == Rational(16, 1155));
    CHECK(Rational::parse("-8/105") == Rational(-8, 105));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK((Rational(1, 2) - Rational(3)) == Rational(-5, 2));

    for (int i = 0; i < 200; i++) {
        const Rational a = rand_rational(), b = rand_rational(), c = rand_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("gaussian and quadratic tower conjugation") {
    using G = Gaussian<Rational>;
    const G i = G::i();
    CHECK(i * i == G(Rational(-1)));
    CHECK((G(Rational(1), Rational(2)) / G(Rational(3), Rational(-1))).is_zero() == false);

    for (int k = 0; k < 100; k++) {
        constG:: /* keep compiler honest */ G u(rand_rational(), rand_rational());
        const G v(rand_rational(), rand_rational());
        CHECK((u * v).conj() == u.conj() * v.conj());
        CHECK((u * u.conj()).is_real());
        if (!v.is_zero()) CHECK(u / v * v == u);
    }

    using Q = QuadExt<Rational>;
    const Rational d(7);
    for (int k = 0; k < 100; k++) {
        const Q u(rand_rational(), rand_rational(), d);
        const Q v(rand_rational(), rand_rational(), d);
        CHECK((u * v).conj() == u.conj() * v.conj());
        const Q nrm = u * u.conj();
        CHECK(nrm.is_base());
        if (!v.is_zero()) CHECK(u / v * v == u);
    }
    // incompatible square roots refuse to mix
    CHECK_THROWS_AS(Q::sqrt_d(Rational(2)) + Q::sqrt_d(Rational(3)), TowerOverflowError);
}

TEST_CASE("unipoly arithmetic, division, derivative") {
    const UniPoly<Rational> p{Rational(-1), Rational(0), Rational(1)};  // t^2-1
    const UniPoly<Rational> q{Rational(1), Rational(1)};                // t+1
    CHECK(divexact_ring(p, q) == UniPoly<Rational>{Rational(-1), Rational(1)});
    CHECK_THROWS_AS(divexact_ring(p, UniPoly<Rational>{Rational(2), Rational(1)}), MathError);
    CHECK(p.derivative() == UniPoly<Rational>{Rational(0), Rational(2)});
    CHECK(p.eval(Rational(3)) == Rational(8));
    const auto [qq, rr] = div_qr(p, UniPoly<Rational>{Rational(2), Rational(1)});
    CHECK(qq * UniPoly<Rational>{Rational(2), Rational(1)} + rr == p);
    CHECK(poly_gcd(p * q, p) == p.scaled(p.lc().inv()));
}

TEST_CASE("resultant pins and equivalence with the Sylvester determinant") {
    const UniPoly<Rational> zm1{Rational(-1), Rational(1)};
    const UniPoly<Rational> zp1{Rational(1), Rational(1)};
    // Sylvester convention: res(p, q) = lc(p)^deg q * prod q over roots of p.
    CHECK(resultant(zm1, zp1) == Rational(2));
    CHECK(sylvester_resultant(zm1, zp1) == Rational(2));

    for (int k = 0; k < 60; k++) {
        UniPoly<Rational> a = rand_poly(4), b = rand_poly(4);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
    }
    // shared root => zero resultant
    for (int k = 0; k < 30; k++) {
        UniPoly<Rational> common = rand_poly(2);
        if (common.degree() < 1) continue;
        UniPoly<Rational> a = common * rand_poly(2);
        UniPoly<Rational> b = common * rand_poly(2);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(resultant(a, b) == Rational(0));
    }
}

namespace {

// Q[l][b][a]: polynomials in l (lambda+1 is built from this), then b, then a.
using Pl = UniPoly<Rational>;
using Plb = UniPoly<Pl>;
using Plba = UniPoly<Plb>;

Plba c3(long v) { return Plba(Plb(Pl(Rational(v)))); }
Plba var_l() { return Plba(Plb(Pl{Rational(0), Rational(1)})); }
Plba var_b() { return Plba(Plb{Pl{}, Pl(Rational(1))}); }
Plba var_a() { return Plba{Plb{}, Plb(Pl(Rational(1)))}; }

}  // namespace

TEST_CASE("families resultant P_ab reproduces the displayed factorization") {
    const Plba a = var_a(), b = var_b(), l = var_l();  // l stands for lambda
    const Plba mu = l + c3(1);                         // lambda + 1
    // h = a + b z + (3-3a-2b) z^2 + (2a+b-2) z^3, htilde = -b z - 4(.) z^2 - 9(.) z^3
    const Plba h2 = c3(3) - c3(3) * a - c3(2) * b;
    const Plba h3 = c3(2) * a + b - c3(2);
    UniPoly<Plba> h{a, b, h2, h3};
    UniPoly<Plba> ht{Plba{}, -b, h2.scaled(Plb(Pl(Rational(-4)))), h3.scaled(Plb(Pl(Rational(-9))))};
    UniPoly<Plba> f = ht - UniPoly<Plba>(mu) * h;
    UniPoly<Plba> g = h.derivative();

    const Plba res = resultant(f, g);

    // (2a+b-2) (6a+2b-6+mu) (-18ab^2-6b^3+18b^2 + mu(108a^3+108a^2 b-216a^2+36ab^2+108a-108ab-9b^2+4b^3))
    const Plba f1 = c3(2) * a + b - c3(2);
    const Plba f2 = c3(6) * a + c3(2) * b - c3(6) + mu;
    const Plba f3 = c3(-18) * a * b * b - c3(6) * b * b * b + c3(18) * b * b +
                    mu * (c3(108) * a * a * a + c3(108) * a * a * b - c3(216) * a * a +
                          c3(36) * a * b * b + c3(108) * a - c3(108) * a * b - c3(9) * b * b +
                          c3(4) * b * b * b);
    CHECK(res == f1 * f2 * f3);
}

TEST_CASE("special-locus resultants match the displayed forms") {
    // b = 0: res_z(htilde - mu h, h'/z) = 216 (a-1)^3 (6a-6+mu), polynomials in Q[l][a]
    using Pa = UniPoly<Pl>;  // Q[l][a]
    auto c2 = [](long v) { return Pa(Pl(Rational(v))); };
    const Pa aa{Pl{}, Pl(Rational(1))};
    const Pa mu{Pl{Rational(1), Rational(1)}};  // 1 + l
    const Pa h2 = c2(3) - c2(3) * aa;
    const Pa h3 = c2(2) * aa - c2(2);
    const UniPoly<Pa> h{aa, Pa{}, h2, h3};
    const UniPoly<Pa> ht{Pa{}, Pa{}, h2.scaled(Pl(Rational(-4))), h3.scaled(Pl(Rational(-9)))};
    const UniPoly<Pa> f = ht - UniPoly<Pa>(mu) * h;
    // h' = 2 h2 z + 3 h3 z^2, so h'/z = 2 h2 + 3 h3 z
    const UniPoly<Pa> g{h2.scaled(Pl(Rational(2))), h3.scaled(Pl(Rational(3)))};
    const Pa res = resultant(f, g);
    const Pa am1 = aa - c2(1);
    const Pa expected = c2(216) * am1 * am1 * am1 * (c2(6) * aa - c2(6) + mu);
    CHECK(res == expected);

    // b = 2-2a: res_z(htilde - mu h, h') = -4 (a-1)^2 (2a-2+mu)
    const Pa bb = c2(2) - c2(2) * aa;
    const Pa h2b = c2(3) - c2(3) * aa - c2(2) * bb;
    const UniPoly<Pa> hB{aa, bb, h2b};  // z^3 coefficient vanishes on the locus
    const UniPoly<Pa> htB{Pa{}, -bb, h2b.scaled(Pl(Rational(-4)))};
    const UniPoly<Pa> fB = htB - UniPoly<Pa>(mu) * hB;
    const UniPoly<Pa> gB = hB.derivative();
    const Pa resB = resultant(fB, gB);
    const Pa expectedB = c2(-4) * am1 * am1 * (c2(2) * aa - c2(2) + mu);
    CHECK(resB == expectedB);
}

TEST_CASE("real root isolation") {
    // x^2 - 2
    const UniPoly<Rational> p{Rational(-2), Rational(0), Rational(1)};
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].hi < Rational(0));
    CHECK(roots[1].lo > Rational(0));
    auto r1 = refine_root(primitive_integer_part(squarefree_part(p)), roots[1], Rational(1, 100));
    CHECK(r1.lo > Rational(1));
    CHECK(r1.hi < Rational(2));

    // x^2 + 1: no real roots
    CHECK(isolate_real_roots(UniPoly<Rational>{Rational(1), Rational(0), Rational(1)}).empty());

    // rational roots land as intervals containing them; multiplicities collapse
    const UniPoly<Rational> q = UniPoly<Rational>{Rational(-1), Rational(1)} *
                                UniPoly<Rational>{Rational(-1), Rational(1)} *
                                UniPoly<Rational>{Rational(3), Rational(1)};
    auto qr = isolate_real_roots(q);
    REQUIRE(qr.size() == 2);
    CHECK((qr[0].lo <= Rational(-3) && Rational(-3) <= qr[0].hi));
    CHECK((qr[1].lo <= Rational(1) && Rational(1) <= qr[1].hi));

    // count equals Sturm count between -B and B
    for (int k = 0; k < 40; k++) {
        UniPoly<Rational> f = rand_poly(5);
        if (f.degree() < 1) continue;
        const auto iso = isolate_real_roots(f);
        const auto sf = primitive_integer_part(squarefree_part(f));
        const SturmChain chain(sf);
        const Rational bound = cauchy_root_bound(sf);
        CHECK(static_cast<int>(iso.size()) == chain.count_roots(-bound, bound));
        for (size_t i = 1; i < iso.size(); i++) CHECK(iso[i - 1].hi <= iso[i].lo);
    }
}

TEST_CASE("solve_linear_exact distinguishes inconsistent from underdetermined") {
    Matrix<Rational> id = Matrix<Rational>::identity(2);
    auto r = solve_linear_exact(id, {Rational(1, 2), Rational(-3)});
    REQUIRE(r.status == SolveStatus::Ok);
    CHECK(r.solution == std::vector<Rational>{Rational(1, 2), Rational(-3)});

    Matrix<Rational> m(2, 2);
    m(0, 0) = Rational(1); m(0, 1) = Rational(1);
    m(1, 0) = Rational(2); m(1, 1) = Rational(2);
    CHECK(solve_linear_exact(m, {Rational(1), Rational(3)}).status == SolveStatus::Inconsistent);
    CHECK(solve_linear_exact(m, {Rational(1), Rational(2)}).status == SolveStatus::Underdetermined);
}

TEST_CASE("univariate sign certification") {
    // f = n-1, n0=2 -> +
    CHECK(sign_certify_univariate(RatFunc(UniPoly<Rational>{Rational(-1), Rational(1)}), Rational(2)).kind ==
          SignCert::Kind::Positive);
    // f = n^2 - 10^4, n0=50 -> fails with witness near 100
    const auto fail = sign_certify_univariate(
        RatFunc(UniPoly<Rational>{Rational(-10000), Rational(0), Rational(1)}), Rational(50));
    CHECK(fail.kind == SignCert::Kind::Failed);
    REQUIRE(fail.witness.has_value());
    CHECK(fail.witness->lo <= Rational(100));
    CHECK(fail.witness->hi >= Rational(100));
    // f = -(n^2+1)/n^4, n0=1 -> -
    const RatFunc f(UniPoly<Rational>{Rational(-1), Rational(0), Rational(-1)},
                    UniPoly<Rational>{Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK(sign_certify_univariate(f, Rational(1)).kind == SignCert::Kind::Negative);
}

TEST_CASE("region sign certification") {
    // G = h + n on {n>=1, 0<=h<=n-1} -> +
    BiPoly g1{UniPoly<Rational>::x(), UniPoly<Rational>::one()};  // n + h
    const RatFunc zero, env(UniPoly<Rational>{Rational(-1), Rational(1)});
    CHECK(sign_certify_region(g1, Rational(1), zero, env).kind == SignCert::Kind::Positive);
    // G = h - n on {n>=2, 0<=h<=n-1} -> -
    BiPoly g2{-UniPoly<Rational>::x(), UniPoly<Rational>::one()};  // -n + h
    CHECK(sign_certify_region(g2, Rational(2), zero, env).kind == SignCert::Kind::Negative);
    // quadratic in h with an interior dip that stays positive:
    // G = (h - n)^2 + 1 on {n >= 1, 0 <= h <= 2n}
    BiPoly g3{UniPoly<Rational>{Rational(1), Rational(0), Rational(1)},  // n^2 + 1
              UniPoly<Rational>{Rational(0), Rational(-2)},              // -2n
              UniPoly<Rational>::one()};
    const RatFunc env2(UniPoly<Rational>{Rational(0), Rational(2)});
    CHECK(sign_certify_region(g3, Rational(1), zero, env2).kind == SignCert::Kind::Positive);
    // and one that actually dips negative inside: G = (h-n)^2 - 1 must fail
    BiPoly g4{UniPoly<Rational>{Rational(-1), Rational(0), Rational(1)},
              UniPoly<Rational>{Rational(0), Rational(-2)}, UniPoly<Rational>::one()};
    CHECK(sign_certify_region(g4, Rational(1), zero, env2).kind == SignCert::Kind::Failed);
}
