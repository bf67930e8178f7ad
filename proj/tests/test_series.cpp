#include "tropdiff/series.hpp"
#include "tropdiff/verify.hpp"

#include <doctest.h>

using namespace tropdiff;

namespace {

TruncSeries bool_series(std::initializer_list<unsigned> support,
                        std::optional<unsigned> trunc = kDefaultTruncDeg) {
    TruncSeries s(Semiring::boolean, trunc);
    for (unsigned d : support) s.accumulate(d, SemiringValue::boolean(true));
    return s;
}

TruncSeries pos_series(std::initializer_list<std::pair<unsigned, Rat>> entries,
                       std::optional<unsigned> trunc = kDefaultTruncDeg) {
    TruncSeries s(Semiring::pos_rat, trunc);
    for (const auto& [deg, c] : entries) s.accumulate(deg, SemiringValue::pos_rat(c));
    return s;
}

}  // namespace

TEST_CASE("boolean product is the Minkowski sum of supports") {
    TruncSeries prod = series_mul(bool_series({0, 2}), bool_series({1}));
    CHECK(prod == bool_series({1, 3}));
}

TEST_CASE("squaring 1 + t") {
    TruncSeries s = pos_series({{0, 1}, {1, 1}});
    TruncSeries sq = series_mul(s, s);
    CHECK(sq == pos_series({{0, 1}, {1, 1}, {2, 1}}));  // 1 + t + t^2
    CHECK(series_add(s, s) == s);
}

TEST_CASE("truncation tightens to the coarser input") {
    TruncSeries a = pos_series({{0, 1}}, 10);
    TruncSeries b = pos_series({{1, 2}}, 4);
    CHECK(series_add(a, b).trunc_deg() == 4);
    CHECK(series_mul(a, b).trunc_deg() == 4);
    TruncSeries exact = pos_series({{0, 1}}, std::nullopt);
    CHECK(series_add(exact, b).trunc_deg() == 4);
    CHECK(series_mul(exact, exact).is_exact());
}

TEST_CASE("2-adic weighted differentiation matches the displayed series") {
    // 1 + 2t + 3t^2 + 5t^3 + 7t^4 + 11t^5: the weights |n|_2 scale each
    // coefficient as it shifts down.
    TruncSeries x = pos_series({{0, 1}, {1, 2}, {2, 3}, {3, 5}, {4, 7}, {5, 11}}, 5);
    SeriesDifferential d = SeriesDifferential::padic(2);
    TruncSeries x1 = differentiate(x, d);
    CHECK(x1 == pos_series({{0, 2}, {1, make_rat(3, 2)}, {2, 5}, {3, make_rat(7, 4)}, {4, 11}}, 4));
    TruncSeries x2 = differentiate(x1, d);
    CHECK(x2 == pos_series({{0, make_rat(3, 2)}, {1, make_rat(5, 2)}, {2, make_rat(7, 4)},
                            {3, make_rat(11, 4)}}, 3));
}

TEST_CASE("strict shift and degenerate weights") {
    CHECK(differentiate(bool_series({0}), SeriesDifferential::strict_shift()).empty());
    TruncSeries t2 = pos_series({{2, 1}});
    CHECK(differentiate(t2, SeriesDifferential::degenerate(2)).empty());
    CHECK_FALSE(differentiate(t2, SeriesDifferential::degenerate(3)).empty());
    TruncSeries exhausted = pos_series({{0, 1}}, 0);
    CHECK_THROWS_AS(differentiate(exhausted, SeriesDifferential::strict_shift()), TruncationError);
    CHECK_THROWS_AS(SeriesDifferential::padic(4), EngineError);
}

TEST_CASE("projections take the leading term") {
    PairDescriptor t2 = rank2_pair(2);
    Projected p = project(pos_series({{0, 1}, {2, make_rat(1, 2)}}), t2);
    CHECK(p.value == SemiringValue::rank2(0, 1));
    CHECK_FALSE(p.caveat);

    // x' of 1 + beta t^2 with beta = 3: leading term (beta/2) t.
    TruncSeries x = pos_series({{0, 1}, {2, 3}});
    Projected dp = project(differentiate(x, t2.differential), t2);
    CHECK(dp.value == SemiringValue::rank2(1, make_rat(3, 2)));

    PairDescriptor b = boolean_pair();
    CHECK(project(bool_series({3, 5}), b).value == SemiringValue::trop_exp(3));
}

TEST_CASE("empty projections carry a caveat only under truncation") {
    PairDescriptor b = boolean_pair();
    Projected truncated = project(bool_series({}, 8), b);
    CHECK(truncated.value.is_zero());
    CHECK(truncated.caveat);
    Projected exact = project(bool_series({}, std::nullopt), b);
    CHECK(exact.value.is_zero());
    CHECK_FALSE(exact.caveat);
}

TEST_CASE("separating derivative order") {
    PairDescriptor b = boolean_pair();
    TruncSeries a = bool_series({0, 2}, 10);
    TruncSeries c = bool_series({0, 3}, 10);
    auto n = separating_derivative_order(a, c, b);
    REQUIRE(n.has_value());
    // Brute force over n: d{0,2} = {1} and d{0,3} = {2} already project
    // differently, so the least separating order is 1.
    unsigned expected = 0;
    for (;; ++expected) {
        Projected pa = project(differentiate(a, b.differential, expected), b);
        Projected pc = project(differentiate(c, b.differential, expected), b);
        if (!(pa.value == pc.value)) break;
    }
    CHECK(expected == 1);
    CHECK(*n == expected);

    CHECK_FALSE(separating_derivative_order(a, a, b).has_value());
    CHECK(separating_derivative_order(bool_series({1}, 10), bool_series({2}, 10), b) == 0u);
    // Exactly known equal series terminate too (derivatives of both go empty).
    TruncSeries e1 = bool_series({0, 2}, std::nullopt);
    CHECK_FALSE(separating_derivative_order(e1, e1, b).has_value());
    // ... while exactly known distinct ones separate.
    CHECK(separating_derivative_order(bool_series({0, 2}, std::nullopt),
                                      bool_series({0, 3}, std::nullopt), b) == 1u);
}

TEST_CASE("differentials are additive") {
    auto sample = [](unsigned seed) {
        TruncSeries s(Semiring::pos_rat, 9);
        for (unsigned deg = 0; deg <= 9; ++deg)
            if ((seed >> deg) & 1) s.accumulate(deg, SemiringValue::pos_rat(make_rat(deg + seed + 1, 3)));
        return s;
    };
    for (auto d : {SeriesDifferential::strict_shift(), SeriesDifferential::padic(2),
                   SeriesDifferential::degenerate(3)}) {
        for (unsigned seed = 1; seed < 40; ++seed) {
            TruncSeries a = sample(seed);
            TruncSeries b = sample(seed * 7 + 3);
            CHECK(differentiate(series_add(a, b), d) ==
                  series_add(differentiate(a, d), differentiate(b, d)));
        }
    }
}

TEST_CASE("tropical Leibniz suites") {
    for (auto d : {SeriesDifferential::padic(2), SeriesDifferential::padic(3),
                   SeriesDifferential::degenerate(2)}) {
        CheckReport r = verify_leibniz(d, Semiring::pos_rat, 60, 25);
        INFO(r.first_counterexample);
        CHECK(r.failures == 0);
    }
    CheckReport strict = verify_leibniz(SeriesDifferential::strict_shift(), Semiring::boolean, 60, 25);
    INFO(strict.first_counterexample);
    CHECK(strict.failures == 0);
}

TEST_CASE("projection homomorphism suites") {
    for (auto pair : {boolean_pair(), rank2_pair(2)}) {
        CheckReport r = verify_projection_hom(pair, 80);
        INFO(r.first_counterexample);
        CHECK(r.failures == 0);
    }
}

TEST_CASE("series formatting") {
    CHECK(to_string(pos_series({{0, 1}, {2, make_rat(1, 2)}, {5, 8}}, 16)) ==
          "1 + (1/2)t^2 + 8t^5 + O(t^17)");
    CHECK(to_string(bool_series({0, 2}, std::nullopt)) == "{0, 2}");
    CHECK(to_string(pos_series({}, std::nullopt)) == "0");
    CHECK(to_string(pos_series({{1, 1}}, std::nullopt)) == "t");
}
