#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamel/partial_fn.hpp"
#include "support/test_rng.hpp"

#include <algorithm>
#include <vector>

using namespace hamel;

namespace {

Vec1 unit(std::uint32_t id) { return Vec1::unit(Symbol{id}); }

Word make_word(std::vector<Letter> ls) { return Word{std::move(ls)}; }

std::vector<PairVec> sorted_pairs(std::vector<PairVec> ps) {
    std::sort(ps.begin(), ps.end(), [](const PairVec& a, const PairVec& b) {
        if (a.first < b.first) return true;
        if (b.first < a.first) return false;
        return a.second < b.second;
    });
    return ps;
}

// Random injective partial map over unit vectors of symbols [0, n).
PartialFn random_fn(trng::Rng& rng, int n) {
    std::vector<PairVec> ps;
    const long k = rng.pick(0, n);
    for (long i = 0; i < k; ++i)
        ps.push_back({unit(static_cast<std::uint32_t>(rng.pick(0, n - 1))),
                      unit(static_cast<std::uint32_t>(rng.pick(0, n - 1)))});
    return PartialFn::from_pairs_lenient(ps);
}

Word random_word(trng::Rng& rng, int generators, int max_blocks) {
    Word w;
    const long m = rng.pick(1, max_blocks);
    GenId last = -1;
    for (long i = 0; i < m; ++i) {
        GenId g;
        do {
            g = static_cast<GenId>(rng.pick(0, generators - 1));
        } while (g == last);
        int e = static_cast<int>(rng.pick(1, 2));
        if (rng.pick(0, 1)) e = -e;
        w.letters.push_back({g, e});
        last = g;
    }
    return w;
}

}  // namespace

TEST_CASE("insert and lookup") {
    PartialFn f;
    CHECK(f.empty());
    f.insert(unit(0), unit(1));
    CHECK(f.size() == 1);
    CHECK(f.has(unit(0)));
    CHECK(!f.has(unit(1)));
    CHECK(f.has_value(unit(1)));
    CHECK(*f.apply(unit(0)) == unit(1));
    CHECK(!f.apply(unit(1)).has_value());
    CHECK(*f.unapply(unit(1)) == unit(0));
    CHECK(!f.unapply(unit(0)).has_value());

    f.insert(unit(0), unit(1));  // identical pair is a no-op
    CHECK(f.size() == 1);
}

TEST_CASE("insert rejects clashes with the right kind") {
    PartialFn f;
    f.insert(unit(0), unit(1));
    try {
        f.insert(unit(0), unit(2));
        FAIL("expected a domain clash");
    } catch (const ConstructionError& e) {
        CHECK(e.kind() == FnError::DomainClash);
    }
    try {
        f.insert(unit(2), unit(1));
        FAIL("expected an injectivity violation");
    } catch (const ConstructionError& e) {
        CHECK(e.kind() == FnError::InjectivityViolation);
    }
    CHECK(f.size() == 1);  // failed inserts leave no trace
}

TEST_CASE("extended-copy insert leaves the source untouched") {
    PartialFn f;
    f.insert(unit(0), unit(1));
    PartialFn g = pf_insert(f, unit(2), unit(3));
    CHECK(f.size() == 1);
    CHECK(!f.has(unit(2)));
    CHECK(g.size() == 2);
    CHECK(*g.apply(unit(2)) == unit(3));
}

TEST_CASE("graph and from_pairs round-trip") {
    std::vector<PairVec> ps{{unit(2), unit(0)}, {unit(0), unit(2)}, {unit(1), unit(1)}};
    PartialFn f = PartialFn::from_pairs(ps);
    auto g = f.graph();
    REQUIRE(g.size() == 3);
    CHECK(g == sorted_pairs(ps));  // sorted by first component
    CHECK_THROWS_AS(PartialFn::from_pairs({{unit(0), unit(1)}, {unit(0), unit(2)}}),
                    ConstructionError);
    CHECK_THROWS_AS(PartialFn::from_pairs({{unit(0), unit(1)}, {unit(2), unit(1)}}),
                    ConstructionError);
}

TEST_CASE("lenient reconstruction keeps first occurrences") {
    PartialFn f = PartialFn::from_pairs_lenient(
        {{unit(0), unit(1)}, {unit(0), unit(2)}, {unit(3), unit(1)}, {unit(4), unit(5)}});
    CHECK(f.size() == 2);
    CHECK(*f.apply(unit(0)) == unit(1));
    CHECK(!f.has(unit(3)));  // its value was already taken
    CHECK(*f.apply(unit(4)) == unit(5));
}

TEST_CASE("word evaluation on hand examples") {
    PartialFn f0 = PartialFn::from_pairs({{unit(0), unit(1)}, {unit(1), unit(2)}});
    PartialFn f1 = PartialFn::from_pairs({{unit(1), unit(3)}});
    std::vector<PartialFn> funcs{f0, f1};

    CHECK(*eval_word(funcs, Word{}, unit(7)) == unit(7));  // identity everywhere
    CHECK(*eval_word(funcs, make_word({{0, 1}}), unit(0)) == unit(1));
    CHECK(!eval_word(funcs, make_word({{0, 1}}), unit(2)).has_value());
    CHECK(*eval_word(funcs, make_word({{0, -1}}), unit(1)) == unit(0));
    CHECK(!eval_word(funcs, make_word({{0, -1}}), unit(0)).has_value());
    CHECK(*eval_word(funcs, make_word({{0, 2}}), unit(0)) == unit(2));
    CHECK(!eval_word(funcs, make_word({{0, 2}}), unit(1)).has_value());
    CHECK(*eval_word(funcs, make_word({{0, -2}}), unit(2)) == unit(0));
    // f1 after f0: 0 -> 1 -> 3
    CHECK(*eval_word(funcs, make_word({{0, 1}, {1, 1}}), unit(0)) == unit(3));
    CHECK(!eval_word(funcs, make_word({{0, 1}, {1, 1}}), unit(1)).has_value());
    // inverse path: 3 -> 1 -> 0
    CHECK(*eval_word(funcs, make_word({{1, -1}, {0, -1}}), unit(3)) == unit(0));
}

TEST_CASE("word graphs on hand examples") {
    PartialFn f0 = PartialFn::from_pairs({{unit(0), unit(1)}, {unit(1), unit(2)}});
    PartialFn f1 = PartialFn::from_pairs({{unit(1), unit(3)}});
    std::vector<PartialFn> funcs{f0, f1};

    CHECK(word_graph(funcs, make_word({{0, 1}})) ==
          std::vector<PairVec>{{unit(0), unit(1)}, {unit(1), unit(2)}});
    CHECK(word_graph(funcs, make_word({{0, 2}})) ==
          std::vector<PairVec>{{unit(0), unit(2)}});
    CHECK(word_graph(funcs, make_word({{0, -1}})) ==
          std::vector<PairVec>{{unit(1), unit(0)}, {unit(2), unit(1)}});
    CHECK(word_graph(funcs, make_word({{0, 1}, {1, 1}})) ==
          std::vector<PairVec>{{unit(0), unit(3)}});
    // f0 after f1: 1 -> 3, then 3 is outside dom(f0), so nothing survives
    CHECK(word_graph(funcs, make_word({{1, 1}, {0, 1}})).empty());
}

TEST_CASE("word graph agrees with evaluation") {
    trng::Rng rng(17);
    for (int round = 0; round < 300; ++round) {
        std::vector<PartialFn> funcs{random_fn(rng, 8), random_fn(rng, 8)};
        Word w = random_word(rng, 2, 3);
        auto g = word_graph(funcs, w);
        for (const auto& p : g) {
            auto y = eval_word(funcs, w, p.first);
            REQUIRE(y.has_value());
            CHECK(*y == p.second);
            // and back again
            auto x = eval_word(funcs, inverse(w), p.second);
            REQUIRE(x.has_value());
            CHECK(*x == p.first);
        }
        // graph of a composition of injections: all firsts and seconds distinct
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            CHECK(g[i].first < g[i + 1].first);
        auto seconds = g;
        std::sort(seconds.begin(), seconds.end(),
                  [](const PairVec& a, const PairVec& b) { return a.second < b.second; });
        for (std::size_t i = 0; i + 1 < seconds.size(); ++i)
            CHECK(seconds[i].second < seconds[i + 1].second);
    }
}

TEST_CASE("inverse word graph is the transpose") {
    trng::Rng rng(18);
    for (int round = 0; round < 300; ++round) {
        std::vector<PartialFn> funcs{random_fn(rng, 8), random_fn(rng, 8), random_fn(rng, 8)};
        Word w = random_word(rng, 3, 3);
        auto fwd = word_graph(funcs, w);
        auto bwd = word_graph(funcs, inverse(w));
        std::vector<PairVec> flipped;
        for (const auto& p : bwd) flipped.push_back({p.second, p.first});
        CHECK(sorted_pairs(fwd) == sorted_pairs(flipped));
    }
}
