#include "tropdiff/forest.hpp"
#include "tropdiff/verify.hpp"

#include <doctest.h>

using namespace tropdiff;

namespace {

SemiringValue pr(long num, long den = 1) { return SemiringValue::pos_rat(make_rat(num, den)); }

TruncSeries pos_series(std::initializer_list<std::pair<unsigned, Rat>> entries,
                       std::optional<unsigned> trunc = kDefaultTruncDeg) {
    TruncSeries s(Semiring::pos_rat, trunc);
    for (const auto& [deg, c] : entries) s.accumulate(deg, SemiringValue::pos_rat(c));
    return s;
}

Assignment padic_assignment(std::vector<TruncSeries> values) {
    return Assignment{Semiring::pos_rat, SeriesDifferential::padic(2), std::move(values)};
}

}  // namespace

TEST_CASE("sums and products of leaves") {
    ForestExpr ab = forest_mul(coeff_leaf(pr(2)), var_leaf(0));
    REQUIRE(ab.trees.size() == 1);
    CHECK(ab.trees[0].kids.size() == 2);  // two leaves at one root

    ForestExpr f = forest_sum(ab, forest_zero());
    CHECK(f == ab);
    CHECK(forest_mul(ab, forest_zero()).is_zero());
    CHECK(forest_mul(ab, forest_one()) == ab);
}

TEST_CASE("the differential inserts an edge at each root") {
    ForestExpr d = forest_d(var_leaf(0));
    REQUIRE(d.trees.size() == 1);
    REQUIRE(d.trees[0].kids.size() == 1);
    CHECK_FALSE(d.trees[0].kids[0].is_leaf());
    CHECK(forest_d(forest_zero()).is_zero());
    // Sums pass through d tree by tree.
    ForestExpr two = forest_sum(var_leaf(0), var_leaf(1));
    CHECK(forest_d(two) == forest_sum(forest_d(var_leaf(0)), forest_d(var_leaf(1))));
}

TEST_CASE("rewrites: coefficient merging and absorption") {
    // Sibling coefficient leaves merge multiplicatively: e^-1 * e^-2 -> e^-3.
    ForestExpr sib = forest_mul(coeff_leaf(SemiringValue::trop_exp(1)),
                                coeff_leaf(SemiringValue::trop_exp(2)));
    CHECK(normalize(sib) == coeff_leaf(SemiringValue::trop_exp(3)));

    // A zero leaf absorbs its whole tree.
    ForestExpr dead = forest_mul(var_leaf(0), coeff_leaf(pr(0)));
    CHECK(normalize(dead).is_zero());
    ForestExpr half_dead = forest_sum(dead, var_leaf(1));
    CHECK(normalize(half_dead) == var_leaf(1));

    // Unit leaves disappear.
    CHECK(normalize(forest_mul(var_leaf(0), coeff_leaf(pr(1)))) == var_leaf(0));
}

TEST_CASE("rewrites: root-grafted coefficient twins merge additively") {
    ForestExpr t = forest_d(var_leaf(0));
    ForestExpr r1t = forest_mul(coeff_leaf(pr(3)), t);
    ForestExpr r2t = forest_mul(coeff_leaf(pr(5)), t);
    // max(3, 5) = 5 in the pos_rat semiring.
    CHECK(normalize(forest_sum(r1t, r2t)) == normalize(forest_mul(coeff_leaf(pr(5)), t)));
    // With equal coefficients this is idempotency of identical trees.
    CHECK(normalize(forest_sum(r1t, r1t)) == normalize(r1t));
}

TEST_CASE("rewrites: differentiated constants vanish") {
    // d of a bare coefficient is zero once labels denote constants.
    CHECK(normalize(forest_d(coeff_leaf(pr(7)))).is_zero());
    // ... and so is d(1).
    CHECK(normalize(forest_d(forest_one())).is_zero());
    // A variable under d survives.
    CHECK_FALSE(normalize(forest_d(var_leaf(0))).is_zero());
}

TEST_CASE("evaluation realizes the universal property target") {
    // x * d(x) with x = 1 + t^2 under the 2-adic weighted shift:
    // (1 + t^2) * (1/2)t = (1/2)t + (1/2)t^3.
    Assignment asg = padic_assignment({pos_series({{0, 1}, {2, 1}})});
    ForestExpr f = forest_mul(var_leaf(0), forest_d(var_leaf(0)));
    TruncSeries direct = series_mul(asg.values[0], differentiate(asg.values[0], asg.differential));
    CHECK(eval_forest(f, asg) == direct);
    CHECK(direct == pos_series({{1, make_rat(1, 2)}, {3, make_rat(1, 2)}}, 15));

    CHECK(eval_forest(coeff_leaf(pr(5, 3)), asg) == constant_series(pr(5, 3)));
    CHECK(eval_forest(forest_zero(), asg).empty());
}

TEST_CASE("the display tree evaluates identically before and after normalize") {
    // r1 * x1 * d(d(x2)) * d(r2 * x1 * d(x2))
    ForestExpr f = forest_mul(
        forest_mul(coeff_leaf(pr(3)), var_leaf(0)),
        forest_mul(forest_d(forest_d(var_leaf(1))),
                   forest_d(forest_mul(forest_mul(coeff_leaf(pr(1, 2)), var_leaf(0)),
                                       forest_d(var_leaf(1))))));
    Assignment asg = padic_assignment(
        {pos_series({{0, 1}, {1, 2}, {3, 1}}), pos_series({{0, 1}, {2, make_rat(1, 4)}, {5, 8}})});
    CHECK(series_equal_to_common_trunc(eval_forest(normalize(f), asg), eval_forest(f, asg)));
}

TEST_CASE("evaluation is a differential semiring homomorphism") {
    CheckReport r = verify_forest_soundness(SeriesDifferential::padic(2), 60);
    INFO(r.first_counterexample);
    CHECK(r.failures == 0);
}

TEST_CASE("the Leibniz bend holds under every evaluation") {
    Assignment asg = padic_assignment(
        {pos_series({{0, 1}, {2, 1}}), pos_series({{1, 3}, {2, make_rat(1, 2)}})});
    // d(x*x) against x*d(x) twice, then a mixed product.
    ForestExpr x = var_leaf(0);
    ForestExpr y = var_leaf(1);
    for (auto [a, b] : {std::pair{x, x}, std::pair{x, y}, std::pair{forest_d(x), y}}) {
        std::vector<TruncSeries> bend{eval_forest(forest_d(forest_mul(a, b)), asg),
                                      eval_forest(forest_mul(a, forest_d(b)), asg),
                                      eval_forest(forest_mul(b, forest_d(a)), asg)};
        CHECK(series_bend_holds(bend));
    }
}

TEST_CASE("forest formatting") {
    ForestExpr f = forest_mul(coeff_leaf(pr(2)),
                              forest_mul(var_leaf(0), forest_d(forest_mul(var_leaf(0),
                                                                          forest_d(var_leaf(1))))));
    CHECK(to_string(f) == "2 * x1 * d(x1 * d(x2))");
    CHECK(to_string(forest_zero()) == "0");
    CHECK(to_string(forest_one()) == "1");
}
