#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamel/qspace.hpp"
#include "support/dense_oracle.hpp"
#include "support/test_rng.hpp"

#include <vector>

using namespace hamel;

namespace {
Vec1 unit(std::uint32_t id) { return Vec1::unit(Symbol{id}); }
}

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rat(2, 4).str() == "1/2");
    CHECK(Rat(-6, 3).str() == "-2");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat::parse("2/4").str() == "1/2");
    CHECK(Rat::parse("-2/4").str() == "-1/2");
    CHECK(Rat::parse("17").str() == "17");
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
    const Rat a(1, 2), b(1, 3);
    CHECK((a + b).str() == "5/6");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a / b).str() == "3/2");
    CHECK((-a).str() == "-1/2");
    CHECK_THROWS_AS(a / Rat(0), std::domain_error);
    CHECK(a.cmp(b) > 0);
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1).is_one());
    CHECK(Rat(-3, 7).sign() == -1);
}

TEST_CASE("vector canonical form") {
    auto v = Vec1::from_terms({{Symbol{3}, Rat(1)}, {Symbol{1}, Rat(2)},
                               {Symbol{3}, Rat(-1)}, {Symbol{0}, Rat(0)}});
    CHECK(v.terms().size() == 1);
    CHECK(v.str() == "(2)s1");
    CHECK(v.coeff(Symbol{1}) == Rat(2));
    CHECK(v.coeff(Symbol{3}).is_zero());
    CHECK(Vec1{}.is_zero());
    CHECK(Vec1{}.str() == "0");
    CHECK(unit(5).max_symbol() == 5);
    CHECK(!Vec1{}.max_symbol().has_value());
}

TEST_CASE("vector arithmetic") {
    const Vec1 e0 = unit(0), e1 = unit(1);
    CHECK(vec_add(e0, vec_neg(e0)).is_zero());  // additive inverse
    CHECK((e0 + e1).str() == "(1)s0+(1)s1");
    CHECK((e0 - e1).str() == "(1)s0+(-1)s1");
    CHECK(vec_scale(Rat(1, 2), e0 + e1).str() == "(1/2)s0+(1/2)s1");
    CHECK(vec_scale(Rat(0), e0).is_zero());
    CHECK((Rat(3) * e1) == Vec1::from_terms({{Symbol{1}, Rat(3)}}));
}

TEST_CASE("vector text round-trip") {
    CHECK(Vec1::parse("0").is_zero());
    CHECK(Vec1::parse("(1)s0").str() == "(1)s0");
    CHECK(Vec1::parse("(-2/3)s4+(1)s9").str() == "(-2/3)s4+(1)s9");
    // out-of-order and duplicated terms canonicalize on parse
    CHECK(Vec1::parse("(1)s9+(1)s4+(-2)s9").str() == "(1)s4+(-1)s9");
    CHECK_THROWS_AS(Vec1::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Vec1::parse("(1)s"), std::invalid_argument);
    CHECK_THROWS_AS(Vec1::parse("(1/0)s0"), std::domain_error);
    CHECK_THROWS_AS(Vec1::parse("(1)s0+"), std::invalid_argument);
    CHECK_THROWS_AS(Vec1::parse("s0"), std::invalid_argument);

    trng::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto v = trng::random_vec(rng, 8, 10);
        CHECK(Vec1::parse(v.str()) == v);
    }
}

TEST_CASE("pair text round-trip") {
    const PairVec p{unit(0) + unit(2), Vec1{}};
    CHECK(p.str() == "<(1)s0+(1)s2 | 0>");
    CHECK(PairVec::parse(p.str()) == p);
    CHECK_THROWS_AS(PairVec::parse("(1)s0 | 0"), std::invalid_argument);
    CHECK_THROWS_AS(PairVec::parse("<(1)s0|0>"), std::invalid_argument);

    trng::Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        auto q = trng::random_pair(rng, 8, 10);
        CHECK(PairVec::parse(q.str()) == q);
    }
}

TEST_CASE("span basics") {
    SpanBasis s;
    CHECK(span_insert(s, PairVec{unit(0), Vec1{}}));  // rank 1, independent
    CHECK(s.rank() == 1);
    CHECK(!span_insert(s, PairVec{unit(0) + unit(0), Vec1{}}));  // same line
    CHECK(!span_insert(s, PairVec{}));                           // zero vector
    CHECK(span_contains(s, PairVec{}));  // zero in any span
    CHECK(span_contains(SpanBasis{}, PairVec{}));
}

TEST_CASE("span membership, hand-computed") {
    // p1 = <e0, e1>, p2 = <e1, e0>
    SpanBasis s(true);
    s.insert(PairVec{unit(0), unit(1)});
    s.insert(PairVec{unit(1), unit(0)});
    CHECK(s.contains(PairVec{unit(0) + unit(1), unit(0) + unit(1)}));
    CHECK(!s.contains(PairVec{unit(0), unit(0)}));
    auto rep = s.represent(PairVec{unit(0) + unit(1), unit(0) + unit(1)});
    REQUIRE(rep.has_value());
    CHECK(*rep == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(!s.represent(PairVec{unit(0), unit(0)}).has_value());
}

TEST_CASE("span representation with fractions, hand-computed") {
    // p1 = <(1/2)s0, s1>, p2 = <s0, 3 s1>; then <0, s1> = -2 p1 + p2
    SpanBasis s(true);
    s.insert(PairVec{vec_scale(Rat(1, 2), unit(0)), unit(1)});
    s.insert(PairVec{unit(0), vec_scale(Rat(3), unit(1))});
    auto rep = s.represent(PairVec{Vec1{}, unit(1)});
    REQUIRE(rep.has_value());
    CHECK(*rep == std::vector<Rat>{Rat(-2), Rat(1)});
}

TEST_CASE("represent covers dependent inserts with zero coefficients") {
    SpanBasis s(true);
    const PairVec p{unit(0), unit(1)};
    CHECK(s.insert(p));
    CHECK(!s.insert(p));  // dependent insert still gets a coefficient slot
    auto rep = s.represent(p);
    REQUIRE(rep.has_value());
    CHECK(*rep == std::vector<Rat>{Rat(1), Rat(0)});
    auto zero = s.represent(PairVec{});
    REQUIRE(zero.has_value());
    CHECK(*zero == std::vector<Rat>{Rat(0), Rat(0)});
}

TEST_CASE("represent requires provenance tracking") {
    SpanBasis s;
    s.insert(PairVec{unit(0), Vec1{}});
    CHECK_THROWS_AS(s.represent(PairVec{unit(0), Vec1{}}), std::logic_error);
}

TEST_CASE("plif examples") {
    CHECK(is_plif({}));  // empty set
    std::vector<PairVec> dep{{unit(0), unit(1)},
                             {vec_scale(Rat(2), unit(0)), vec_scale(Rat(2), unit(1))}};
    CHECK(!is_plif(dep));
    std::vector<PairVec> ind{{unit(0), unit(1)}, {unit(1), unit(0)}};
    CHECK(is_plif(ind));
    std::vector<PairVec> with_sum = ind;
    with_sum.push_back({unit(0) + unit(1), unit(0) + unit(1)});
    CHECK(!is_plif(with_sum));
}

TEST_CASE("fresh symbols are outside every earlier span") {
    SymbolAllocator alloc;
    CHECK(fresh_symbol(alloc).id == 0);  // initial state
    CHECK(fresh_symbol(alloc).id == 1);
    CHECK(alloc.allocated() == 2);

    trng::Rng rng(21);
    for (int round = 0; round < 50; ++round) {
        SymbolAllocator a;
        const int k = static_cast<int>(rng.pick(1, 6));
        for (int i = 0; i < k; ++i) a.fresh();
        SpanBasis s;
        for (int i = 0; i < 8; ++i)
            s.insert(PairVec{trng::random_vec(rng, k, 5), trng::random_vec(rng, k, 5)});
        const Vec1 fresh = Vec1::unit(fresh_symbol(a));
        CHECK(!s.contains(PairVec{fresh, Vec1{}}));
    }
}

TEST_CASE("represent reproduces its input as an exact combination") {
    trng::Rng rng(31);
    for (int round = 0; round < 200; ++round) {
        auto pts = trng::random_points(rng, 10, 6, 8);
        SpanBasis s(true);
        for (const auto& p : pts) s.insert(p);
        auto probe = trng::random_pair(rng, 6, 8);
        auto rep = s.represent(probe);
        CHECK(rep.has_value() == s.contains(probe));
        if (!rep) continue;
        REQUIRE(rep->size() == pts.size());
        PairVec sum;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            sum.first = sum.first + vec_scale((*rep)[i], pts[i].first);
            sum.second = sum.second + vec_scale((*rep)[i], pts[i].second);
        }
        CHECK(sum == probe);
    }
}

TEST_CASE("span agrees with the dense elimination oracle") {
    trng::Rng rng(41);
    for (int round = 0; round < 300; ++round) {
        auto pts = trng::random_points(rng, 12, 8, 10);
        SpanBasis s;
        for (const auto& p : pts) s.insert(p);
        CHECK(is_plif(pts) == oracle::dense_is_plif(pts));
        for (int probes = 0; probes < 3; ++probes) {
            auto v = trng::random_pair(rng, 8, 10);
            CHECK(s.contains(v) == oracle::dense_contains(pts, v));
        }
        // members built from the points themselves must always be contained
        if (!pts.empty()) {
            PairVec combo;
            for (const auto& p : pts) {
                Rat c(rng.pick(-3, 3));
                combo.first = combo.first + vec_scale(c, p.first);
                combo.second = combo.second + vec_scale(c, p.second);
            }
            CHECK(s.contains(combo));
            CHECK(oracle::dense_contains(pts, combo));
        }
    }
}

TEST_CASE("insert reports independence exactly when rank grows") {
    trng::Rng rng(51);
    for (int round = 0; round < 100; ++round) {
        auto pts = trng::random_points(rng, 10, 6, 6);
        SpanBasis s;
        std::vector<PairVec> prefix;
        for (const auto& p : pts) {
            const bool fresh = !oracle::dense_contains(prefix, p);
            CHECK(s.insert(p) == fresh);
            prefix.push_back(p);
        }
        CHECK(s.inserts() == pts.size());
    }
}
