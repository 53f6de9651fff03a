#include <random>

#include "doctest.h"
#include "qea/error.hpp"
#include "qea/ncalg.hpp"

using namespace qea;

namespace {

std::vector<Rat> tz(const AlgebraSpecPtr& spec) { return std::vector<Rat>(spec->rank, Rat(0)); }

std::vector<Rat> tvec(const AlgebraSpecPtr& spec, std::initializer_list<Rat> vals) {
    std::vector<Rat> v(vals);
    v.resize(spec->rank, Rat(0));
    return v;
}

Word random_word(const AlgebraSpecPtr& spec, std::mt19937& rng, int maxlen = 4) {
    std::uniform_int_distribution<int> len(0, maxlen), kind(0, 1), idx(0, spec->rank - 1);
    Word w;
    int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back(Gen{kind(rng) == 1, idx(rng)});
    return w;
}

// Flat triple-tensor canonical form for coassociativity checks.
struct Triple {
    Mono a, b, c;
    bool operator<(const Triple& o) const {
        if (!(a == o.a)) return a < o.a;
        if (!(b == o.b)) return b < o.b;
        return c < o.c;
    }
    bool operator==(const Triple& o) const { return a == o.a && b == o.b && c == o.c; }
};

std::vector<std::pair<Triple, Scalar>> canonical_triples(std::vector<std::pair<Triple, Scalar>> ts) {
    std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<Triple, Scalar>> out;
    for (auto& [t, c] : ts) {
        if (c.is_zero()) continue;
        if (!out.empty() && out.back().first == t) {
            out.back().second += c;
            if (out.back().second.is_zero()) out.pop_back();
        } else {
            out.emplace_back(t, c);
        }
    }
    return out;
}

// (Delta (x) id)Delta(x) expanded to flat triples.
std::vector<std::pair<Triple, Scalar>> delta_left(const NcExpr& x) {
    std::vector<std::pair<Triple, Scalar>> out;
    TensorExpr dx = coproduct(x);
    for (const auto& t : dx.terms()) {
        NcExpr left(x.spec(), {NcTerm{Scalar::one(x.spec()->scalar), t.left}});
        TensorExpr dl = coproduct(left);
        for (const auto& t2 : dl.terms())
            out.push_back({Triple{t2.left, t2.right, t.right}, t.coeff * t2.coeff});
    }
    return canonical_triples(std::move(out));
}

// (id (x) Delta)Delta(x).
std::vector<std::pair<Triple, Scalar>> delta_right(const NcExpr& x) {
    std::vector<std::pair<Triple, Scalar>> out;
    TensorExpr dx = coproduct(x);
    for (const auto& t : dx.terms()) {
        NcExpr right(x.spec(), {NcTerm{Scalar::one(x.spec()->scalar), t.right}});
        TensorExpr dr = coproduct(right);
        for (const auto& t2 : dr.terms())
            out.push_back({Triple{t.left, t2.left, t2.right}, t.coeff * t2.coeff});
    }
    return canonical_triples(std::move(out));
}

}  // namespace

TEST_CASE("t-monomials commute past letters with q powers") {
    auto a1 = make_an(1);
    // t1 e1 = q^2 e1 t1 (a_11 = 2); with L = 2, q^2 = v^4.
    NcExpr lhs = nc_t_monomial(a1, tvec(a1, {Rat(1)})) * nc_gen(a1, Gen{false, 0});
    NcExpr rhs = nc_term(a1, Scalar::v_pow(a1->scalar, 4), {Gen{false, 0}}, tvec(a1, {Rat(1)}));
    CHECK(lhs == rhs);

    auto g2 = make_g2();
    // t1 e2 = q^{-1} e2 t1 (a_12 = -1, q_1 = q = v^3).
    NcExpr l2 = nc_t_monomial(g2, tvec(g2, {Rat(1), Rat(0)})) * nc_gen(g2, Gen{false, 1});
    NcExpr r2 = nc_term(g2, Scalar::v_pow(g2->scalar, -3), {Gen{false, 1}}, tvec(g2, {Rat(1), Rat(0)}));
    CHECK(l2 == r2);
    // Unit law.
    NcExpr x = nc_word(g2, {Gen{false, 0}, Gen{true, 1}});
    CHECK(nc_one(g2) * x == x);
    CHECK(x * nc_one(g2) == x);
}

TEST_CASE("nc_multiply is associative on random terms") {
    auto g2 = make_g2();
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> tv(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
        auto mk = [&] {
            std::vector<Rat> texp = {Rat(tv(rng)), Rat(tv(rng))};
            return nc_term(g2, Scalar::v_pow(g2->scalar, tv(rng)), random_word(g2, rng, 3), texp);
        };
        NcExpr x = mk(), y = mk(), z = mk();
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("spec mismatch rejected") {
    auto a1 = make_an(1);
    auto a2 = make_an(2);
    CHECK_THROWS_AS(nc_gen(a1, Gen{false, 0}) * nc_gen(a2, Gen{false, 0}), Error);
}

TEST_CASE("coproduct on generators and words") {
    auto a2 = make_an(2);
    auto one = Scalar::one(a2->scalar);
    NcExpr e1 = nc_gen(a2, Gen{false, 0});
    TensorExpr d = coproduct(e1);
    // e1 (x) 1 + t1 (x) e1
    TensorExpr want(a2, {TensorTerm{one, Mono{{Gen{false, 0}}, tz(a2)}, Mono{{}, tz(a2)}},
                         TensorTerm{one, Mono{{}, tvec(a2, {Rat(1)})}, Mono{{Gen{false, 0}}, tz(a2)}}});
    CHECK(d == want);

    // Group-likes keep rational exponents.
    auto a1 = make_an(1);
    NcExpr th = nc_t_monomial(a1, tvec(a1, {Rat(1, 2)}));
    TensorExpr dh = coproduct(th);
    TensorExpr wanth(a1, {TensorTerm{Scalar::one(a1->scalar), Mono{{}, tvec(a1, {Rat(1, 2)})},
                                     Mono{{}, tvec(a1, {Rat(1, 2)})}}});
    CHECK(dh == wanth);

    // Frozen hand expansion of Delta(e1 e2).
    NcExpr e1e2 = nc_word(a2, {Gen{false, 0}, Gen{false, 1}});
    TensorExpr want2(a2, {TensorTerm{one, Mono{{Gen{false, 0}, Gen{false, 1}}, tz(a2)}, Mono{{}, tz(a2)}},
                          TensorTerm{one, Mono{{Gen{false, 0}}, tvec(a2, {Rat(0), Rat(1)})},
                                     Mono{{Gen{false, 1}}, tz(a2)}},
                          TensorTerm{Scalar::v_pow(a2->scalar, -3),
                                     Mono{{Gen{false, 1}}, tvec(a2, {Rat(1), Rat(0)})},
                                     Mono{{Gen{false, 0}}, tz(a2)}},
                          TensorTerm{one, Mono{{}, tvec(a2, {Rat(1), Rat(1)})},
                                     Mono{{Gen{false, 0}, Gen{false, 1}}, tz(a2)}}});
    CHECK(coproduct(e1e2) == want2);
    // Algebra map: Delta(x y) = Delta(x) Delta(y).
    CHECK(coproduct(e1e2) == coproduct(e1) * coproduct(nc_gen(a2, Gen{false, 1})));
}

TEST_CASE("coproduct is coassociative on words up to length 4") {
    auto g2 = make_g2();
    std::mt19937 rng(99);
    std::vector<NcExpr> samples;
    for (int j = 0; j < g2->rank; ++j) {
        samples.push_back(nc_gen(g2, Gen{false, j}));
        samples.push_back(nc_gen(g2, Gen{true, j}));
    }
    samples.push_back(nc_t_monomial(g2, tvec(g2, {Rat(1), Rat(-1)})));
    for (int trial = 0; trial < 8; ++trial) samples.push_back(nc_word(g2, random_word(g2, rng)));
    for (const auto& x : samples) {
        auto l = delta_left(x), r = delta_right(x);
        REQUIRE(l.size() == r.size());
        for (size_t k = 0; k < l.size(); ++k) {
            CHECK(l[k].first == r[k].first);
            CHECK(l[k].second == r[k].second);
        }
    }
}

TEST_CASE("counit axioms") {
    auto a2 = make_an(2);
    CHECK(counit(nc_t_monomial(a2, tvec(a2, {Rat(3, 2), Rat(0)}))) == Scalar::one(a2->scalar));
    CHECK(counit(nc_term(a2, Scalar::one(a2->scalar), {Gen{false, 0}}, tvec(a2, {Rat(0), Rat(1)})))
              .is_zero());
    NcExpr x = nc_one(a2) * Scalar::of(a2->scalar, Rat(5)) +
               nc_gen(a2, Gen{true, 0}) * Scalar::of(a2->scalar, Rat(2));
    CHECK(counit(x) == Scalar::of(a2->scalar, Rat(5)));

    // (eps (x) id)Delta(x) = x = (id (x) eps)Delta(x) on sample words.
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        NcExpr w = nc_word(a2, random_word(a2, rng));
        NcExpr left(a2), right(a2);
        TensorExpr dw = coproduct(w);
        for (const auto& t : dw.terms()) {
            NcExpr l(a2, {NcTerm{Scalar::one(a2->scalar), t.left}});
            NcExpr r(a2, {NcTerm{Scalar::one(a2->scalar), t.right}});
            left = left + r * (t.coeff * counit(l));
            right = right + l * (t.coeff * counit(r));
        }
        CHECK(left == w);
        CHECK(right == w);
    }
}

TEST_CASE("antipode images and involution pair") {
    auto a1 = make_an(1);
    // S(e1) = -t1^{-1} e1 = -q^{-2} e1 t1^{-1}; with L = 2, q^{-2} = v^{-4}.
    NcExpr se = antipode(nc_gen(a1, Gen{false, 0}));
    CHECK(se == nc_term(a1, -Scalar::v_pow(a1->scalar, -4), {Gen{false, 0}}, tvec(a1, {Rat(-1)})));
    // S(f1) = -f1 t1.
    NcExpr sf = antipode(nc_gen(a1, Gen{true, 0}));
    CHECK(sf == nc_term(a1, -Scalar::one(a1->scalar), {Gen{true, 0}}, tvec(a1, {Rat(1)})));
    CHECK(antipode(nc_one(a1)) == nc_one(a1));

    auto a2 = make_an(2);
    NcExpr ef = nc_word(a2, {Gen{false, 0}, Gen{true, 1}});
    CHECK(antipode(antipode(ef), true) == ef);

    std::mt19937 rng(555);
    auto g2 = make_g2();
    for (int trial = 0; trial < 12; ++trial) {
        NcExpr w = nc_word(g2, random_word(g2, rng));
        CHECK(antipode(antipode(w), true) == w);
        CHECK(antipode(antipode(w, true)) == w);
    }
    // Anti-homomorphism on products.
    NcExpr x = nc_word(g2, {Gen{false, 0}, Gen{false, 1}});
    NcExpr y = nc_word(g2, {Gen{true, 1}});
    CHECK(antipode(x * y) == antipode(y) * antipode(x));
}

TEST_CASE("weight_of counts letters") {
    CHECK(weight_of({Gen{false, 0}, Gen{false, 1}, Gen{false, 0}}) == std::vector<int>{2, 1});
    CHECK(weight_of({}).empty());
    CHECK(weight_of({Gen{true, 1}, Gen{true, 1}, Gen{true, 0}, Gen{true, 1}}) ==
          std::vector<int>{1, 3});
    CHECK_THROWS_AS(weight_of({Gen{false, 0}, Gen{true, 0}}), Error);
}

TEST_CASE("serre elements") {
    auto a2 = make_an(2);
    Scalar two_q = Scalar::v_pow(a2->scalar, 3) + Scalar::v_pow(a2->scalar, -3);  // [2], L = 3
    Gen e1{false, 0}, e2{false, 1};
    NcExpr want = nc_word(a2, {e1, e1, e2}) - nc_word(a2, {e1, e2, e1}) * two_q +
                  nc_word(a2, {e2, e1, e1});
    CHECK(serre_element(a2, 0, 1, false) == want);

    auto a3 = make_an(3);
    NcExpr comm = serre_element(a3, 0, 2, false);
    CHECK(comm == nc_word(a3, {Gen{false, 0}, Gen{false, 2}}) -
                      nc_word(a3, {Gen{false, 2}, Gen{false, 0}}));

    auto g2 = make_g2();
    Scalar two_q1 = Scalar::v_pow(g2->scalar, 3) + Scalar::v_pow(g2->scalar, -3);  // [2] in base q_1
    Gen ge1{false, 0}, ge2{false, 1};
    NcExpr wantg = nc_word(g2, {ge1, ge1, ge2}) - nc_word(g2, {ge1, ge2, ge1}) * two_q1 +
                   nc_word(g2, {ge2, ge1, ge1});
    CHECK(serre_element(g2, 0, 1, false) == wantg);
    // The (2,1) family is quartic in e2.
    CHECK(serre_element(g2, 1, 0, false).terms().size() == 5);
    CHECK_THROWS_AS(serre_element(g2, 0, 0, false), Error);
}
