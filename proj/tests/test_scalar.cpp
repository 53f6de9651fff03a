#include <random>

#include "doctest.h"
#include "qea/error.hpp"
#include "qea/scalar.hpp"

using namespace qea;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<int, int>> coeffs) {
    std::map<int, Rat> m;
    for (auto [e, c] : coeffs) m[e] += c;
    return LaurentPoly::from_map(m);
}

// Random nonzero Laurent polynomial with small support.
LaurentPoly random_poly(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> nterms(0, 3), expd(-3, 3), coeffd(-3, 3);
    std::map<int, Rat> m;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) m[expd(rng)] += coeffd(rng);
    LaurentPoly p = LaurentPoly::from_map(m);
    if (nonzero && p.is_zero()) return LaurentPoly(Rat(1), expd(rng));
    return p;
}

Scalar random_scalar(const ScalarSpecPtr& spec, std::mt19937& rng) {
    RatFunc a(random_poly(rng), random_poly(rng, true));
    if (!spec->sqrt_adjoined) return Scalar::of(spec, a);
    RatFunc b(random_poly(rng), random_poly(rng, true));
    return Scalar::of(spec, a, b);
}

}  // namespace

TEST_CASE("laurent polynomial basics") {
    LaurentPoly p = lp({{1, 1}, {-1, 1}});   // v + v^-1
    LaurentPoly m = lp({{1, 1}, {-1, -1}});  // v - v^-1
    CHECK((p * m) == lp({{2, 1}, {-2, -1}}));
    CHECK(p.bar() == p);
    CHECK(m.bar() == -m);
    CHECK(p.eval(Rat(2)) == Rat(5, 2));
    LaurentPoly q, r;
    LaurentPoly::divmod(lp({{3, 1}, {0, -1}}), lp({{1, 1}, {0, -1}}), q, r);
    CHECK(r.is_zero());
    CHECK(q == lp({{2, 1}, {1, 1}, {0, 1}}));
    CHECK(LaurentPoly::poly_gcd(lp({{2, 1}, {0, -1}}), lp({{1, 1}, {0, 1}})) == lp({{1, 1}, {0, 1}}));
}

TEST_CASE("ratfunc canonical form") {
    // (v^2 - 1)/(v^3 - v) reduces to 1/v after stripping the v factor.
    RatFunc f(lp({{2, 1}, {0, -1}}), lp({{3, 1}, {1, -1}}));
    CHECK(f == RatFunc(LaurentPoly(Rat(1), -1)));
    CHECK(f.den().is_one());
    // Denominator normalization: monic, lowest exponent 0.
    RatFunc g(lp({{0, 1}}), lp({{2, 2}, {1, 2}}));
    CHECK(g.den().low() == 0);
    CHECK(g.den().leading() == 1);
    CHECK(g.den() == lp({{1, 1}, {0, 1}}));
    CHECK(g.num() == LaurentPoly(Rat(1, 2), -1));
}

TEST_CASE("scalar arithmetic and the adjoined root") {
    auto plain = make_scalar_spec(2);
    Scalar x = Scalar::v_pow(plain, 1) + Scalar::v_pow(plain, -1);
    Scalar y = Scalar::v_pow(plain, 1) - Scalar::v_pow(plain, -1);
    CHECK(x * y == Scalar::v_pow(plain, 2) - Scalar::v_pow(plain, -2));

    auto g2 = make_scalar_spec(3, lp({{1, 1}, {-1, 1}}));  // s^2 = v + v^-1
    Scalar s = Scalar::sqrt_sym(g2);
    Scalar si = s.inv();
    CHECK(si * s == Scalar::one(g2));
    CHECK(si.a().is_zero());
    CHECK(si.b() == RatFunc(LaurentPoly(Rat(1)), lp({{1, 1}, {-1, 1}})));
    CHECK(s * s == Scalar::of(g2, RatFunc(lp({{1, 1}, {-1, 1}}))));

    // omega_2 = q_2 - q_2^{-1} with q_2 = q^{1/3} = v.
    Scalar w2 = Scalar::q_pow(g2, Rat(1, 3)) - Scalar::q_pow(g2, Rat(-1, 3));
    CHECK(w2 == Scalar::v_pow(g2, 1) - Scalar::v_pow(g2, -1));
}

TEST_CASE("scalar errors") {
    auto plain = make_scalar_spec(2);
    auto other = make_scalar_spec(3);
    CHECK_THROWS_AS(Scalar::zero(plain).inv(), Error);
    CHECK_THROWS_AS(Scalar::one(plain) + Scalar::one(other), Error);
    CHECK_THROWS_AS(Scalar::q_pow(plain, Rat(1, 3)), Error);
    CHECK_THROWS_AS(Scalar::sqrt_sym(plain), Error);
    // Pole detection.
    Scalar f = Scalar::of(plain, RatFunc(LaurentPoly(Rat(1)), lp({{1, 1}, {0, -2}})));
    CHECK_THROWS_AS(f.eval_at(Rat(2)), Error);
    CHECK_THROWS_AS(f.eval_at(Rat(0)), Error);
}

TEST_CASE("qnum values") {
    auto g2 = make_scalar_spec(3, lp({{1, 1}, {-1, 1}}));
    CHECK(qnum(g2, 1, Rat(1, 3)) == Scalar::one(g2));
    CHECK(qnum(g2, 2, Rat(1, 3)) == Scalar::v_pow(g2, 1) + Scalar::v_pow(g2, -1));
    Scalar w2 = Scalar::v_pow(g2, 1) - Scalar::v_pow(g2, -1);
    Scalar w1 = Scalar::q_pow(g2, Rat(1)) - Scalar::q_pow(g2, Rat(-1));
    CHECK(qnum(g2, 3, Rat(1, 3)) * w2 == w1);
    CHECK(qnum(g2, 0, Rat(1, 3)).is_zero());
    CHECK(qnum(g2, -3, Rat(1, 3)) == -qnum(g2, 3, Rat(1, 3)));
    CHECK_THROWS_AS(qnum(g2, 2, Rat(1, 2)), Error);
    // Bar symmetry: [m] is invariant under v -> v^{-1}.
    for (long m = 1; m <= 6; ++m) CHECK(qnum(g2, m, Rat(1, 3)).bar() == qnum(g2, m, Rat(1, 3)));
}

TEST_CASE("qbinom values") {
    auto a1 = make_scalar_spec(1);
    CHECK(qbinom(a1, 2, 1, Rat(1)) == Scalar::v_pow(a1, 1) + Scalar::v_pow(a1, -1));
    CHECK(qbinom(a1, 5, 0, Rat(1)) == Scalar::one(a1));
    CHECK_THROWS_AS(qbinom(a1, 3, 4, Rat(1)), Error);

    auto g2 = make_scalar_spec(3, lp({{1, 1}, {-1, 1}}));
    // Independent oracle: full factorial ratio [4][3][2][1] / ([2][1])^2.
    Scalar num = Scalar::one(g2), den = Scalar::one(g2);
    for (long i = 1; i <= 4; ++i) num = num * qnum(g2, i, Rat(1, 3));
    for (long i = 1; i <= 2; ++i) {
        den = den * qnum(g2, i, Rat(1, 3));
        den = den * qnum(g2, i, Rat(1, 3));
    }
    Scalar expected = num / den;
    CHECK(qbinom(g2, 4, 2, Rat(1, 3)) == expected);
    // Frozen expansion of the same value.
    CHECK(expected == Scalar::of(g2, RatFunc(lp({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}))));
}

TEST_CASE("eval_at exact values") {
    auto g2 = make_scalar_spec(3, lp({{1, 1}, {-1, 1}}));
    Scalar x = Scalar::v_pow(g2, 1) + Scalar::v_pow(g2, -1);
    QuadNum e = x.eval_at(Rat(2));
    CHECK(e.p == Rat(5, 2));
    CHECK(e.r == 0);
    QuadNum es = Scalar::sqrt_sym(g2).eval_at(Rat(2));
    CHECK(es.p == 0);
    CHECK(es.r == 1);
    CHECK(es.disc == Rat(5, 2));
    QuadNum e3 = qnum(g2, 3, Rat(1, 3)).eval_at(Rat(2));
    CHECK(e3.p == Rat(21, 4));  // 4 + 1 + 1/4 by direct substitution
}

TEST_CASE("field axioms on random scalars") {
    auto spec = make_scalar_spec(3, lp({{1, 1}, {-1, 1}}));
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar x = random_scalar(spec, rng);
        Scalar y = random_scalar(spec, rng);
        Scalar z = random_scalar(spec, rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inv() == Scalar::one(spec));
        // Canonicalization is equality-complete: x - y == 0 iff x == y.
        CHECK(((x - y).is_zero()) == (x == y));
    }
}

TEST_CASE("eval_at is a ring homomorphism") {
    auto spec = make_scalar_spec(3, lp({{1, 1}, {-1, 1}}));
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> pnum(1, 9), pden(1, 5);
    int done = 0;
    while (done < 10) {
        Rat v0(pnum(rng), pden(rng));
        Scalar x = random_scalar(spec, rng);
        Scalar y = random_scalar(spec, rng);
        try {
            QuadNum lhs = (x * y).eval_at(v0);
            QuadNum rhs = x.eval_at(v0) * y.eval_at(v0);
            CHECK(lhs == rhs);
            QuadNum ls = (x + y).eval_at(v0);
            QuadNum rs = x.eval_at(v0) + y.eval_at(v0);
            CHECK(ls == rs);
            ++done;
        } catch (const Error&) {
            // pole at the sampled point; resample
        }
    }
}
