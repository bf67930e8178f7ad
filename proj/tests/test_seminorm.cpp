#include "tropdiff/seminorm.hpp"
#include "tropdiff/parse.hpp"
#include "tropdiff/verify.hpp"

#include <doctest.h>

using namespace tropdiff;

namespace {

RatSeries rs(const std::string& text) { return parse_rat_series(text); }

// Substitutes x back into sum_i c_i x^(i); used as the oracle residual.
RatSeries residual(const std::vector<RatSeries>& coeffs, const RatSeries& x) {
    RatSeries acc;
    for (unsigned i = 0; i < coeffs.size(); ++i)
        acc = rat_add(acc, rat_mul(coeffs[i], rat_ddt(x, i)));
    return acc;
}

}  // namespace

TEST_CASE("exact series ring operations") {
    CHECK(rat_mul(rs("1 + t"), rs("1 - t")) == rs("1 - t^2"));
    CHECK(rat_ddt(rs("t^3")) == rs("3t^2"));
    CHECK(rat_ddt(RatSeries::constant(make_rat(9, 2))).empty());
    CHECK_THROWS_AS(rat_ddt(parse_rat_series("1", 0)), TruncationError);
}

TEST_CASE("p-adic norms") {
    CHECK(padic_norm(make_rat(8), 2) == make_rat(1, 8));
    CHECK(padic_norm(make_rat(1, 4), 2) == make_rat(4));
    CHECK(padic_norm(make_rat(3), 2) == 1);
    CHECK(padic_norm(0, 2) == 0);
    CHECK(padic_norm(make_rat(-18), 3) == make_rat(1, 9));
    CHECK_THROWS_AS(padic_norm(make_rat(1), 6), EngineError);
}

TEST_CASE("enhancements lift series coefficient-wise") {
    EnhancedSeminorm g = EnhancedSeminorm::grigoriev();
    CHECK(enhance(rs("1 - t^2"), g) == parse_series("{0, 2}", Semiring::boolean));

    EnhancedSeminorm u2 = EnhancedSeminorm::padic_rank2(2);
    CHECK(enhance(rs("1 + 2t + (1/2)t^2"), u2) ==
          parse_series("1 + (1/2)t + 2t^2", Semiring::pos_rat));

    CHECK(enhance(RatSeries(), g).empty());
    CHECK(enhance(RatSeries(), u2).empty());
}

TEST_CASE("the enhancement is not multiplicative, the value is") {
    EnhancedSeminorm g = EnhancedSeminorm::grigoriev();
    TruncSeries lifted_product = enhance(rat_mul(rs("1 + t"), rs("1 - t")), g);
    TruncSeries product_of_lifts = series_mul(enhance(rs("1 + t"), g), enhance(rs("1 - t"), g));
    CHECK(lifted_product == parse_series("{0, 2}", Semiring::boolean));
    CHECK(product_of_lifts == parse_series("{0, 1, 2}", Semiring::boolean));
    CHECK_FALSE(lifted_product == product_of_lifts);
    // project . enhance = value on the same instance.
    CHECK(project(lifted_product, g.pair).value == value(rs("1 - t^2"), g).value);
}

TEST_CASE("values take the leading norm") {
    EnhancedSeminorm g = EnhancedSeminorm::grigoriev();
    CHECK(value(rs("t^3 + t^7"), g).value == SemiringValue::trop_exp(3));

    EnhancedSeminorm u2 = EnhancedSeminorm::padic_rank2(2);
    CHECK(value(rs("8t^2 + t^3"), u2).value == SemiringValue::rank2(2, make_rat(1, 8)));
    CHECK(value(rs("1"), u2).value == SemiringValue::rank2(0, 1));

    Projected hidden = value(parse_rat_series("0 + O(t^4)", 3), u2);
    CHECK(hidden.value.is_zero());
    CHECK(hidden.caveat);
}

TEST_CASE("seminorm axioms hold on samples") {
    std::vector<RatSeries> samples{rs("1 + t"), rs("-1 + t"), rs("2t"), rs("1 - t^2"),
                                   rs("3 + (1/2)t^3"), RatSeries()};
    for (auto e : {EnhancedSeminorm::grigoriev(), EnhancedSeminorm::padic_rank2(2)}) {
        CheckReport r = check_seminorm_axioms(e, samples);
        INFO(r.first_counterexample);
        CHECK(r.failures == 0);
    }
    // The instance singled out in the docs: v((1+t)+(-1+t)) = v(2t) = e^-1 <= 1.
    EnhancedSeminorm g = EnhancedSeminorm::grigoriev();
    SemiringValue vsum = value(rat_add(rs("1 + t"), rs("-1 + t")), g).value;
    CHECK(vsum == SemiringValue::trop_exp(1));
    SemiringValue bound = add(value(rs("1 + t"), g).value, value(rs("-1 + t"), g).value);
    CHECK(leq(vsum, bound));

    CheckReport padic = check_padic_axioms(2, {make_rat(8), make_rat(-3, 4), make_rat(5, 6),
                                               make_rat(1, 2), make_rat(7)});
    CHECK(padic.failures == 0);
    for (auto d : {SeriesDifferential::padic(2), SeriesDifferential::padic(3),
                   SeriesDifferential::degenerate(5), SeriesDifferential::strict_shift()}) {
        CheckReport w = check_weight_seminorm(d, Semiring::pos_rat, 30);
        INFO(w.first_counterexample);
        CHECK(w.failures == 0);
    }
}

TEST_CASE("enhancements commute with the differentials") {
    EnhancedSeminorm u2 = EnhancedSeminorm::padic_rank2(2);
    // a = t^2: both routes give (1/2)t.
    CHECK(enhance(rat_ddt(rs("t^2")), u2) ==
          differentiate(enhance(rs("t^2"), u2), u2.pair.differential));
    CHECK(enhance(rat_ddt(rs("5")), u2).empty());

    EnhancedSeminorm g = EnhancedSeminorm::grigoriev();
    CHECK(enhance(rat_ddt(rs("t^3")), g) == parse_series("{2}", Semiring::boolean));

    for (auto e : {EnhancedSeminorm::grigoriev(), EnhancedSeminorm::padic_rank2(2),
                   EnhancedSeminorm::padic_rank2(3)}) {
        CheckReport r = verify_enhancement_commutes(e, 80);
        INFO(r.first_counterexample);
        CHECK(r.failures == 0);
    }
}

TEST_CASE("tropicalizing equations applies the value coefficient-wise") {
    EnhancedSeminorm u2 = EnhancedSeminorm::padic_rank2(2);
    TropEquation f = trop_equation(parse_rat_diff_poly("x1'' - x1"), u2);
    CHECK_FALSE(f.caveat);
    CHECK(to_string(f.poly) == "x1 + x1''");  // both coefficients have norm (1, 1)

    TropEquation g = trop_equation(parse_rat_diff_poly("4*x1'"), u2);
    DiffPoly expected(Semiring::rank2);
    expected.add_term(DiffMonomial::var(0, 1), SemiringValue::rank2(0, make_rat(1, 4)));
    CHECK(g.poly == expected);

    CHECK(trop_equation(RatDiffPoly(), u2).poly.is_zero());
}

TEST_CASE("linear equations solve by coefficient recursion") {
    // x' - x = 0, x(0) = 1: the exponential series.
    RatSeries exp = solve_linear_ode({rs("-1"), rs("1")}, {make_rat(1)}, 8);
    CHECK(exp.coeff(0) == 1);
    CHECK(exp.coeff(3) == make_rat(1, 6));
    CHECK(exp.coeff(8) == make_rat(1, 40320));
    CHECK(residual({rs("-1"), rs("1")}, exp).empty());

    // x'' + x = 0, x(0) = 0, x'(0) = 1: sine.
    std::vector<RatSeries> harmonic{rs("1"), RatSeries(), rs("1")};
    RatSeries sine = solve_linear_ode(harmonic, {make_rat(0), make_rat(1)}, 9);
    CHECK(sine.coeff(1) == 1);
    CHECK(sine.coeff(2) == 0);
    CHECK(sine.coeff(3) == make_rat(-1, 6));
    CHECK(sine.coeff(5) == make_rat(1, 120));
    CHECK(residual(harmonic, sine).empty());

    // x' = 0, x(0) = 5.
    RatSeries constant = solve_linear_ode({RatSeries(), rs("1")}, {make_rat(5)}, 6);
    CHECK(constant == parse_rat_series("5", 6));

    // A genuinely series-valued coefficient: (1 + t)x' - x = 0.
    std::vector<RatSeries> series_coeff{rs("-1"), rs("1 + t")};
    RatSeries sol = solve_linear_ode(series_coeff, {make_rat(1)}, 7);
    CHECK(residual(series_coeff, sol).empty());

    CHECK_THROWS_AS(solve_linear_ode({rs("1"), rs("t")}, {make_rat(1)}, 5), UnsupportedError);
    CHECK_THROWS_AS(solve_linear_ode({rs("1"), rs("1")}, {}, 5), UnsupportedError);
}

TEST_CASE("tropicalization soundness at desk scale") {
    for (auto e : {EnhancedSeminorm::grigoriev(), EnhancedSeminorm::padic_rank2(2),
                   EnhancedSeminorm::padic_rank2(3)}) {
        CheckReport r = verify_tropicalization_soundness(e, 12);
        INFO(r.first_counterexample);
        CHECK(r.failures == 0);
    }
}

TEST_CASE("rational series formatting") {
    CHECK(to_string(rs("1 + 2t + (1/2)t^2")) == "1 + 2t + (1/2)t^2");
    CHECK(to_string(rs("1 - t^2")) == "1 - t^2");
    CHECK(to_string(rs("-3/4")) == "-3/4");
    CHECK(to_string(parse_rat_series("t", 4)) == "t + O(t^5)");
    CHECK(to_string(parse_rat_diff_poly("x1'' - x1")) == "-x1 + x1''");
}
