#include "tropdiff/diffpoly.hpp"

#include <doctest.h>

using namespace tropdiff;

namespace {

SemiringValue r2(long order, long num, long den = 1) {
    return SemiringValue::rank2(make_rat(order), make_rat(num, den));
}

// (e^-4,1)x + (1,8)x' + (e^-1,8)x''
DiffPoly demo_equation() {
    DiffPoly f(Semiring::rank2);
    f.add_term(DiffMonomial::var(0, 0), r2(4, 1));
    f.add_term(DiffMonomial::var(0, 1), r2(0, 8));
    f.add_term(DiffMonomial::var(0, 2), r2(1, 8));
    return f;
}

// 1 + a1 t + a2 t^2 + ... as an exactly known series (zero tail).
TruncSeries prefix_series(std::initializer_list<Rat> tail_coeffs) {
    TruncSeries s(Semiring::pos_rat, std::nullopt);
    s.accumulate(0, SemiringValue::pos_rat(1));
    unsigned deg = 1;
    for (const Rat& c : tail_coeffs) {
        if (c != 0) s.accumulate(deg, SemiringValue::pos_rat(c));
        ++deg;
    }
    return s;
}

std::vector<SemiringValue> term_values(const EvalResult& ev) {
    std::vector<SemiringValue> out;
    for (const auto& t : ev.terms) out.push_back(t.value.value);
    return out;
}

}  // namespace

TEST_CASE("evaluating a single derivative monomial") {
    PairDescriptor pair = rank2_pair(2);
    // x'' at 1 + beta t^2, beta = 1: leading coefficient beta/2 at degree 0.
    BoundedValue v = eval_monomial(DiffMonomial::var(0, 2), {prefix_series({0, 1})}, pair);
    CHECK_FALSE(v.caveat);
    CHECK(v.value == r2(0, 1, 2));

    CHECK(eval_monomial(DiffMonomial::one(), {prefix_series({})}, pair).value ==
          SemiringValue::one(Semiring::rank2));
}

TEST_CASE("project-then-multiply agrees with multiply-then-project") {
    PairDescriptor pair = rank2_pair(2);
    TruncSeries x = prefix_series({0, 1});  // 1 + t^2
    DiffMonomial m;
    m.multiply_in(0, 0);
    m.multiply_in(0, 1);
    BoundedValue factored = eval_monomial(m, {x}, pair);
    // Other route: multiply in S1, then project.
    TruncSeries prod = series_mul(x, differentiate(x, pair.differential));
    Projected pushed = project(prod, pair);
    CHECK(factored.value == pushed.value);
    CHECK(factored.value == SemiringValue::rank2(1, make_rat(1, 2)));

    // The same coherence on a batch of monomials and points.
    std::vector<TruncSeries> points{prefix_series({1, 1, 1}), prefix_series({0, 3, 0, 5}),
                                    prefix_series({0, 0, make_rat(1, 2), 0, 2})};
    std::vector<DiffMonomial> monomials{DiffMonomial::var(0, 0, 2), DiffMonomial::var(0, 1),
                                        DiffMonomial::var(0, 2), m};
    for (const auto& point : points) {
        for (const auto& mono : monomials) {
            BoundedValue lhs = eval_monomial(mono, {point}, pair);
            TruncSeries acc = constant_series(SemiringValue::one(Semiring::pos_rat));
            for (const auto& [key, mult] : mono.exponents)
                for (unsigned i = 0; i < mult; ++i)
                    acc = series_mul(acc, differentiate(point, pair.differential, key.second));
            Projected rhs = project(acc, pair);
            CHECK_FALSE(lhs.caveat);
            CHECK(lhs.value == rhs.value);
        }
    }
}

TEST_CASE("per-term values of the demo equation") {
    PairDescriptor pair = rank2_pair(2);
    DiffPoly f = demo_equation();

    // alpha = beta = ... = 1.
    EvalResult all_ones = eval_poly(f, {prefix_series({1, 1, 1, 1, 1})}, pair);
    CHECK(term_values(all_ones) ==
          std::vector<SemiringValue>{r2(4, 1), r2(0, 8), r2(1, 4)});
    CHECK(all_ones.value == r2(0, 8));

    // alpha = 0, beta = 1: the displayed (e^-4,1) + (e^-1,4b) + (e^-1,4b).
    EvalResult beta_case = eval_poly(f, {prefix_series({0, 1, 1, 1, 1})}, pair);
    CHECK(term_values(beta_case) ==
          std::vector<SemiringValue>{r2(4, 1), r2(1, 4), r2(1, 4)});
}

TEST_CASE("zero polynomial evaluates to the empty sum") {
    PairDescriptor pair = rank2_pair(2);
    DiffPoly zero(Semiring::rank2);
    EvalResult ev = eval_poly(zero, {prefix_series({})}, pair);
    CHECK(ev.value.is_zero());
    CHECK(ev.terms.empty());
    CHECK(is_solution(zero, {prefix_series({})}, pair) == Verdict::yes);
}

TEST_CASE("demo equation case analysis at concrete coefficients") {
    PairDescriptor pair = rank2_pair(2);
    DiffPoly f = demo_equation();
    CHECK(is_solution(f, {prefix_series({1})}, pair) == Verdict::no);            // alpha != 0
    CHECK(is_solution(f, {prefix_series({0, 1})}, pair) == Verdict::yes);        // beta
    CHECK(is_solution(f, {prefix_series({0, make_rat(7, 5)})}, pair) == Verdict::yes);
    CHECK(is_solution(f, {prefix_series({0, 0, 1})}, pair) == Verdict::no);      // gamma
    CHECK(is_solution(f, {prefix_series({0, 0, 0, 1})}, pair) == Verdict::yes);  // delta
    CHECK(is_solution(f, {prefix_series({0, 0, 0, 0, make_rat(1, 8)})}, pair) == Verdict::yes);
    CHECK(is_solution(f, {prefix_series({0, 0, 0, 0, make_rat(1, 4)})}, pair) == Verdict::no);
}

TEST_CASE("scalar multiples of the equation do not change membership") {
    PairDescriptor pair = rank2_pair(2);
    DiffPoly f = demo_equation();
    DiffPoly scaled(Semiring::rank2);
    for (const auto& [mono, coeff] : f.terms())
        scaled.add_term(mono, mul(coeff, r2(2, 3)));
    for (auto point : {prefix_series({1}), prefix_series({0, 1}), prefix_series({0, 0, 1})})
        CHECK(is_solution(f, {point}, pair) == is_solution(scaled, {point}, pair));
}

TEST_CASE("monomial-only equations vanish only at zero factors") {
    PairDescriptor pair = rank2_pair(2);
    DiffPoly f(Semiring::rank2);
    f.add_term(DiffMonomial::var(0, 0), r2(0, 1));
    TruncSeries zero(Semiring::pos_rat, std::nullopt);
    CHECK(is_solution(f, {zero}, pair) == Verdict::yes);
    CHECK(is_solution(f, {prefix_series({})}, pair) == Verdict::no);
}

TEST_CASE("truncation caveats surface as unknown") {
    PairDescriptor pair = rank2_pair(2);
    DiffPoly f = demo_equation();
    // Constant 1 known only to degree 3: both derivative terms could hide
    // support just past the truncation, and they can reach the maximum.
    TruncSeries fuzzy(Semiring::pos_rat, 3);
    fuzzy.accumulate(0, SemiringValue::pos_rat(1));
    CHECK(is_solution(f, {fuzzy}, pair) == Verdict::unknown);

    // A caveat strictly below the known maximum is harmless: x'' hides at
    // order >= 12 while the first two terms tie at order 0.
    DiffPoly g(Semiring::rank2);
    g.add_term(DiffMonomial::var(0, 0), r2(0, 1));
    g.add_term(DiffMonomial::var(0, 1), r2(0, 1));
    g.add_term(DiffMonomial::var(0, 2), r2(10, 1));
    TruncSeries one_plus_t(Semiring::pos_rat, 3);
    one_plus_t.accumulate(0, SemiringValue::pos_rat(1));
    one_plus_t.accumulate(1, SemiringValue::pos_rat(1));
    CHECK(is_solution(g, {one_plus_t}, pair) == Verdict::yes);
}

TEST_CASE("running past the truncation yields unknown, not a crash") {
    PairDescriptor pair = rank2_pair(2);
    DiffPoly f = demo_equation();
    TruncSeries shallow(Semiring::pos_rat, 1);
    shallow.accumulate(0, SemiringValue::pos_rat(1));
    shallow.accumulate(1, SemiringValue::pos_rat(1));
    CHECK(is_solution(f, {shallow}, pair) == Verdict::unknown);
    CHECK_THROWS_AS(eval_poly(f, {shallow}, pair), TruncationError);
}

TEST_CASE("grigoriev values are projected derivatives") {
    PairDescriptor pair = boolean_pair();
    TruncSeries w(Semiring::boolean, std::nullopt);
    w.accumulate(0, SemiringValue::boolean(true));
    w.accumulate(2, SemiringValue::boolean(true));
    CHECK(grigoriev_val(w, 1, pair).value == SemiringValue::trop_exp(1));

    TruncSeries constant(Semiring::boolean, std::nullopt);
    constant.accumulate(0, SemiringValue::boolean(true));
    Projected dc = grigoriev_val(constant, 1, pair);
    CHECK(dc.value.is_zero());
    CHECK_FALSE(dc.caveat);

    TruncSeries t5(Semiring::boolean, std::nullopt);
    t5.accumulate(5, SemiringValue::boolean(true));
    CHECK(grigoriev_val(t5, 0, pair).value == SemiringValue::trop_exp(5));
}

TEST_CASE("polynomial formatting") {
    CHECK(to_string(demo_equation()) == "(e^-4, 1)*x1 + (1, 8)*x1' + (e^-1, 8)*x1''");
    DiffPoly f(Semiring::trop_exp);
    f.add_term(DiffMonomial::var(0, 0), SemiringValue::trop_exp(0));
    f.add_term(DiffMonomial::var(0, 1), SemiringValue::trop_exp(0));
    CHECK(to_string(f) == "x1 + x1'");
    DiffMonomial m = DiffMonomial::var(0, 3);
    m.multiply_in(1, 1, 2);
    CHECK(to_string(m) == "x1^(3)*x2'^2");
}
