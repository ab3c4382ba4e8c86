#include <doctest.h>

#include <cmath>
#include <random>

#include "abstain/dimensions.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace abstain;

namespace {

DimValue dv(int v) { return DimValue(v); }

HypothesisClass empty_class(std::size_t D) { return HypothesisClass::from_table(Domain::numbered(D), {}); }

HypothesisClass single(std::size_t D) {
    return HypothesisClass::from_table(Domain::numbered(D), {{"h", std::vector<Label>(D, Label::plus)}});
}

}  // namespace

TEST_CASE("DimValue ordering and succ") {
    const DimValue ninf;
    CHECK(ninf.is_neg_inf());
    CHECK(ninf < dv(0));
    CHECK(dv(0) < dv(1));
    CHECK(ninf.succ() == ninf);
    CHECK(dv(2).succ() == 3);
    CHECK(ninf.to_string() == "-inf");
    CHECK(dv(5).to_string() == "5");
    CHECK_THROWS(DimValue(-1));
    CHECK_THROWS(ninf.value());
    CHECK(std::max(ninf, dv(0)) == 0);
}

TEST_CASE("property: min/max distribute over extended integers") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pick(-1, 6);
    auto draw = [&] { const int v = pick(rng); return v < 0 ? DimValue() : DimValue(v); };
    for (int i = 0; i < 2000; ++i) {
        const DimValue a = draw(), b = draw(), c = draw();
        CHECK(std::min(std::max(a, b), c) == std::max(std::min(a, c), std::min(b, c)));
    }
}

TEST_CASE("binom_leq") {
    CHECK(binom_leq(5, 2) == 16);
    CHECK(binom_leq(0, 0) == 1);
    CHECK(binom_leq(3, 7) == 8);
    CHECK(binom_leq(64, 0) == 1);
    CHECK(binom_leq(63, 63) == (std::uint64_t{1} << 63));
    CHECK_THROWS_AS(binom_leq(64, 64), std::overflow_error);
    CHECK_THROWS_AS(binom_leq(200, 100), std::overflow_error);
    for (unsigned t = 0; t <= 16; ++t)
        for (unsigned k = 0; k <= 18; ++k) CHECK(binom_leq(t, k) == oracle::binom_leq_count(t, k));
}

TEST_CASE("ldim frozen values") {
    CHECK(ldim(thresholds(4)) == 2);
    CHECK(ldim(singleton_unions(Domain::numbered(7), 2)) == 2);
    CHECK(ldim(thresholds(1)) == 0);
    CHECK(ldim(single(3)) == 0);
    CHECK(ldim(empty_class(3)).is_neg_inf());
    CHECK(ldim(gen::from_strings({"+", "-"})) == 1);
}

TEST_CASE("property: ldim equals the played-out mistake game") {
    auto suite = gen::standard_suite(3);
    for (std::size_t i = 0; i < suite.classes.size(); ++i) {
        if (suite.classes[i].size() > 20) continue;
        CAPTURE(suite.names[i]);
        CHECK(ldim(suite.classes[i]) == oracle::mistake_game_value(suite.classes[i]));
    }
}

TEST_CASE("eldim frozen values") {
    const auto t4 = thresholds(4);
    CHECK(eldim(t4, 0) == 3);
    CHECK(eldim(t4, 1) == 2);
    CHECK(eldim(t4, 2) == 2);
    CHECK(eldim(t4, 9) == 2);
    CHECK(eldim(gen::from_strings({"+++", "---"}), 0) == 1);
    CHECK(eldim(single(2), 0) == 0);
    CHECK(eldim(empty_class(2), 1).is_neg_inf());
    CHECK_THROWS_AS(eldim(t4, -1), std::invalid_argument);
}

TEST_CASE("property: eldim equals the played-out abstention game") {
    auto suite = gen::standard_suite(4);
    for (std::size_t i = 0; i < suite.classes.size(); ++i) {
        const auto& h = suite.classes[i];
        if (h.size() > 20) continue;
        CAPTURE(suite.names[i]);
        for (int k = 0; k <= 3; ++k) CHECK(eldim(h, k) == oracle::game_value(h, k));
    }
}

TEST_CASE("property: eldim over every class on two points") {
    for (const auto& h : gen::all_classes(2, 4))
        for (int k = 0; k <= 2; ++k) CHECK(eldim(h, k) == oracle::game_value(h, k));
}

TEST_CASE("property: eldim is nonincreasing in k and settles at ldim") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 150; ++trial) {
        auto h = gen::random_class(rng, 10, 6);
        const int d = ldim(h).value();
        DimValue prev = eldim(h, 0);
        for (int k = 1; k <= d + 2; ++k) {
            const DimValue cur = eldim(h, k);
            CHECK(cur <= prev);
            CHECK(cur >= DimValue(d));
            if (k >= d) CHECK(cur == d);
            prev = cur;
        }
    }
}

TEST_CASE("alternative recurrence") {
    CHECK(eldim_alg_form(thresholds(4), 1) == 2);
    CHECK_THROWS_AS(eldim_alg_form(thresholds(4), 0), std::invalid_argument);
    CHECK(eldim_alg_form(empty_class(2), 1).is_neg_inf());
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        auto h = gen::random_class(rng, 6, 5);
        for (int k = 1; k <= 2; ++k) CHECK(eldim_alg_form(h, k) == eldim(h, k));
    }
}

TEST_CASE("eldim_argmax") {
    const auto t4 = thresholds(4);
    DimCache cache;
    auto c = eldim_argmax(t4.full(), 0, cache);
    REQUIRE(c.has_value());
    CHECK(c->value == 3);
    CHECK(t4.domain().point(c->point) == "2");
    CHECK(c->dashed == Label::plus);
    CHECK_FALSE(eldim_argmax(single(2).full(), 0, cache).has_value());

    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        auto h = gen::random_class(rng, 8, 5);
        DimCache hc;
        for (int k = 0; k <= 2; ++k) {
            auto choice = eldim_argmax(h.full(), k, hc);
            if (!choice) {
                CHECK(eldim(h, k) == 0);
                continue;
            }
            CHECK(choice->value == eldim(h, k));
            const auto dashed = h.full().restrict(choice->point, choice->dashed);
            const auto solid = h.full().restrict(choice->point, -choice->dashed);
            DimValue via = eldim(dashed, k, hc);
            if (k > 0) via = std::min(via, eldim(solid, k - 1, hc));
            CHECK(via.succ() == choice->value);
        }
    }
}

TEST_CASE("finite upper bound") {
    CHECK(eldim_upper_finite(thresholds(4), 0) == 3);
    CHECK(eldim_upper_finite(thresholds(16), 1) == 5);
    CHECK(eldim_upper_finite(single(1), 0) == 0);
    CHECK_THROWS_AS(eldim_upper_finite(empty_class(1), 0), std::invalid_argument);
}

TEST_CASE("growth upper bound") {
    CHECK(eldim_upper_growth(thresholds(4), 0) == 3);
    CHECK(eldim_upper_growth(singleton_unions(Domain::numbered(7), 1), 1) == 1);
    CHECK(eldim_upper_growth(empty_class(3), 0).is_neg_inf());
    CHECK_THROWS_AS(eldim_upper_growth(thresholds(8), 0, 2), std::range_error);
}

TEST_CASE("property: eldim respects both upper bounds") {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 120; ++trial) {
        auto h = gen::random_class(rng, 8, 5);
        for (int k = 0; k <= 2; ++k) {
            const DimValue e = eldim(h, k);
            CHECK(e <= DimValue(eldim_upper_finite(h, k)));
            CHECK(e <= eldim_upper_growth(h, k));
        }
    }
}

TEST_CASE("numeric bounds") {
    const double e = std::exp(1.0);
    CHECK(bound_finiteub(1, 0, 0) == doctest::Approx(e));
    CHECK(bound_finiteub(4, 2, 1) == doctest::Approx(6 * e));
    CHECK(bound_finiteub(8, 2, 0) == doctest::Approx(6 * e));
    CHECK(bound_infiniteub(0, 0, 0) == doctest::Approx(e * e));
    CHECK(bound_infiniteub(1, 3, 1) == doctest::Approx(4 * std::pow(e, 4)));
    CHECK(bound_infiniteub(0, 1, 1) == doctest::Approx(2 * std::pow(e, 4)));
    CHECK_THROWS_AS(bound_finiteub(4, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(bound_infiniteub(1, 1, 1), std::invalid_argument);
}

TEST_CASE("shatter frozen values") {
    CHECK(shatter_recursive(thresholds(4), 0) == 1);
    CHECK(shatter_recursive(empty_class(2), 0) == 0);
    CHECK(shatter_recursive(empty_class(2), 3) == 0);
    CHECK(shatter_recursive(thresholds(4), 2) == 4);
    CHECK(shatter_recursive(singleton_unions(Domain::numbered(7), 1), 3) == 4);
    CHECK(shatter_recursive(single(2), 4) == 1);
}

TEST_CASE("shatter paths on a fixed tree") {
    std::vector<HypothesisClass::Row> rows;
    for (int i = 1; i <= 4; ++i) {
        std::vector<Label> r;
        for (int x = 1; x <= 5; ++x) r.push_back(x <= i ? Label::plus : Label::minus);
        rows.emplace_back("h" + std::to_string(i), r);
    }
    auto h = HypothesisClass::from_table(Domain::numbered(5), rows);
    const PointTree tree = {3, 2, 0, 1, 3, 0, 4};
    CHECK(shatter_paths(h, tree) == 4);
    CHECK_THROWS_AS(shatter_paths(h, PointTree{0, 1}), std::invalid_argument);
}

TEST_CASE("property: recursive shatter equals enumeration") {
    for (std::size_t D = 1; D <= 3; ++D) {
        std::mt19937_64 rng(36 + D);
        for (int trial = 0; trial < 25; ++trial) {
            auto h = gen::random_class_over(rng, Domain::numbered(D), std::uniform_int_distribution<std::size_t>(1, 5)(rng));
            for (int t = 0; t <= 3; ++t) CHECK(shatter_recursive(h, t) == shatter_enumerative(h, t));
        }
    }
    CHECK_THROWS_AS(shatter_enumerative(thresholds(8), 4), std::length_error);
}

TEST_CASE("property: shatter bounds and product bound") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 80; ++trial) {
        auto h = gen::random_class(rng, 10, 6);
        const int d = ldim(h).value();
        for (int t = 0; t <= 4; ++t) {
            const auto s = shatter_recursive(h, t);
            CHECK(s <= h.size());
            CHECK(s <= (std::uint64_t{1} << t));
            CHECK(s <= binom_leq(t, d));
        }
        const Domain dom = h.domain();
        auto g = gen::random_class_over(rng, dom, 4);
        auto gh = product(h, g);
        for (int t = 0; t <= 3; ++t) CHECK(shatter_recursive(gh, t) <= shatter_recursive(h, t) * shatter_recursive(g, t));
    }
}

TEST_CASE("shatter of singleton unions with enough points") {
    for (int l = 0; l <= 2; ++l)
        for (int t = 0; t <= 3; ++t) {
            const std::size_t D = std::max<std::size_t>({(std::size_t{1} << t) - 1, static_cast<std::size_t>(l), 1});
            CHECK(shatter_recursive(singleton_unions(Domain::numbered(D), l), t) == binom_leq(t, l));
        }
}

TEST_CASE("egg drop") {
    CHECK(egg_drop(4, 1) == 2);
    CHECK(egg_drop(1, 3) == 0);
    for (int n = 1; n <= 20; ++n) CHECK(egg_drop(n, 0) == n - 1);
    for (int n = 1; n <= 40; ++n)
        for (int k = 0; k <= 3; ++k) CHECK(egg_drop(n, k) == oracle::thresholds_closed_form(n, k));
    CHECK_THROWS_AS(egg_drop(0, 1), std::invalid_argument);
}

TEST_CASE("cache binds to one class") {
    DimCache cache;
    const auto a = thresholds(4), b = thresholds(4);
    CHECK(eldim(a.full(), 1, cache) == 2);
    const auto misses = cache.misses();
    CHECK(eldim(a.full(), 1, cache) == 2);
    CHECK(cache.misses() == misses);
    CHECK(cache.hits() > 0);
    CHECK_THROWS_AS(eldim(b.full(), 1, cache), std::invalid_argument);
    cache.clear();
    CHECK(eldim(b.full(), 1, cache) == 2);
}
