#include "tropdiff/verify.hpp"

#include <algorithm>
#include <random>

namespace tropdiff {

namespace {

using Rng = std::mt19937;

unsigned pick(Rng& rng, unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

Rat random_positive_rat(Rng& rng) {
    long num = static_cast<long>(pick(rng, 1, 12));
    long den = static_cast<long>(pick(rng, 1, 12));
    return make_rat(num, den);
}

Rat random_signed_rat(Rng& rng) {
    Rat q = random_positive_rat(rng);
    return pick(rng, 0, 1) ? q : Rat(-q);
}

SemiringValue random_value(Rng& rng, Semiring tag, bool allow_zero = true) {
    if (allow_zero && pick(rng, 0, 9) == 0) return SemiringValue::zero(tag);
    switch (tag) {
        case Semiring::boolean:
            return SemiringValue::boolean(true);
        case Semiring::trop_exp: {
            long num = static_cast<long>(pick(rng, 0, 16)) - 8;
            long den = static_cast<long>(pick(rng, 1, 4));
            return SemiringValue::trop_exp(make_rat(num, den));
        }
        case Semiring::pos_rat:
            return SemiringValue::pos_rat(random_positive_rat(rng));
        case Semiring::rank2: {
            long num = static_cast<long>(pick(rng, 0, 16)) - 8;
            return SemiringValue::rank2(make_rat(num, static_cast<long>(pick(rng, 1, 4))),
                                        random_positive_rat(rng));
        }
    }
    throw EngineError("unknown semiring tag");
}

TruncSeries random_series(Rng& rng, Semiring tag, unsigned trunc_deg) {
    TruncSeries s(tag, trunc_deg);
    for (unsigned deg = 0; deg <= trunc_deg; ++deg)
        if (pick(rng, 0, 2) == 0) s.accumulate(deg, random_value(rng, tag, false));
    return s;
}

RatSeries random_rat_series(Rng& rng, unsigned trunc_deg) {
    RatSeries s(trunc_deg);
    for (unsigned deg = 0; deg <= trunc_deg; ++deg)
        if (pick(rng, 0, 2) == 0) s.accumulate(deg, random_signed_rat(rng));
    return s;
}

}  // namespace

CheckReport verify_semiring_laws(Semiring tag, unsigned long cases, unsigned seed) {
    Rng rng(seed + static_cast<unsigned>(tag));
    CheckReport report;
    report.name = std::string("laws/") + semiring_name(tag);
    const SemiringValue zero = SemiringValue::zero(tag);
    const SemiringValue one = SemiringValue::one(tag);
    for (unsigned long i = 0; i < cases; ++i) {
        SemiringValue a = random_value(rng, tag);
        SemiringValue b = random_value(rng, tag);
        SemiringValue c = random_value(rng, tag);
        std::string at = " at a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);
        report.record(add(a, a) == a, "a+a != a" + at);
        report.record(add(a, zero) == a, "a+0 != a" + at);
        report.record(mul(a, one) == a, "a*1 != a" + at);
        report.record(mul(a, zero) == zero, "a*0 != 0" + at);
        report.record(add(a, b) == add(b, a), "+ not commutative" + at);
        report.record(mul(a, b) == mul(b, a), "* not commutative" + at);
        report.record(add(add(a, b), c) == add(a, add(b, c)), "+ not associative" + at);
        report.record(mul(mul(a, b), c) == mul(a, mul(b, c)), "* not associative" + at);
        report.record(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), "* not distributive" + at);
        report.record(leq(a, a), "leq not reflexive" + at);
        report.record(!(leq(a, b) && leq(b, a)) || a == b, "leq not antisymmetric" + at);
        report.record(!(leq(a, b) && leq(b, c)) || leq(a, c), "leq not transitive" + at);
        if (tag == Semiring::rank2)
            report.record(leq(a, b) || leq(b, a), "rank2 order not total" + at);

        // Bend-test invariances: permutation, appended zero, and a single
        // nonzero term never vanishing.
        std::vector<SemiringValue> terms{a, b, c};
        bool base = trop_vanishes(terms);
        std::vector<SemiringValue> shuffled{c, a, b};
        report.record(trop_vanishes(shuffled) == base, "bend test not permutation-invariant" + at);
        std::vector<SemiringValue> padded{a, b, c, zero};
        report.record(trop_vanishes(padded) == base, "bend test changed by appended zero" + at);
        if (!a.is_zero())
            report.record(!trop_vanishes({a, zero}), "single nonzero term vanished" + at);
    }
    return report;
}

CheckReport verify_leibniz(const SeriesDifferential& d, Semiring tag, unsigned long pair_cases,
                           unsigned long triple_cases, unsigned trunc_deg, unsigned seed) {
    Rng rng(seed + 17 * static_cast<unsigned>(d.kind) + d.prime);
    CheckReport report;
    report.name = "leibniz";
    for (unsigned long i = 0; i < pair_cases; ++i) {
        TruncSeries a = random_series(rng, tag, trunc_deg);
        TruncSeries b = random_series(rng, tag, trunc_deg);
        TruncSeries ab = series_mul(a, b);
        std::vector<TruncSeries> bend{differentiate(ab, d),
                                      series_mul(a, differentiate(b, d)),
                                      series_mul(b, differentiate(a, d))};
        std::string at = " at a=" + to_string(a) + " b=" + to_string(b);
        report.record(series_bend_holds(bend), "2-fold tropical Leibniz fails" + at);
        if (d.kind == SeriesDifferential::Kind::strict_shift)
            report.record(series_equal_to_common_trunc(bend[0], series_add(bend[1], bend[2])),
                          "strict Leibniz identity fails" + at);
    }
    for (unsigned long i = 0; i < triple_cases; ++i) {
        TruncSeries a = random_series(rng, tag, trunc_deg);
        TruncSeries b = random_series(rng, tag, trunc_deg);
        TruncSeries c = random_series(rng, tag, trunc_deg);
        TruncSeries abc = series_mul(series_mul(a, b), c);
        std::vector<TruncSeries> bend{differentiate(abc, d),
                                      series_mul(series_mul(differentiate(a, d), b), c),
                                      series_mul(series_mul(a, differentiate(b, d)), c),
                                      series_mul(series_mul(a, b), differentiate(c, d))};
        report.record(series_bend_holds(bend),
                      "3-fold tropical Leibniz fails at a=" + to_string(a) + " b=" + to_string(b) +
                          " c=" + to_string(c));
    }
    return report;
}

CheckReport verify_projection_hom(const PairDescriptor& pair, unsigned long cases,
                                  unsigned trunc_deg, unsigned seed) {
    Rng rng(seed + 101 * static_cast<unsigned>(pair.projection));
    CheckReport report;
    report.name = "pi-homomorphism";
    for (unsigned long i = 0; i < cases; ++i) {
        TruncSeries a = random_series(rng, pair.coeff_tag, trunc_deg);
        TruncSeries b = random_series(rng, pair.coeff_tag, trunc_deg);
        Projected pa = project(a, pair);
        Projected pb = project(b, pair);
        Projected psum = project(series_add(a, b), pair);
        Projected pprod = project(series_mul(a, b), pair);
        std::string at = " at a=" + to_string(a) + " b=" + to_string(b);
        if (pa.caveat || pb.caveat || psum.caveat)
            report.skip();
        else
            report.record(psum.value == add(pa.value, pb.value), "pi(a+b) != pi(a)+pi(b)" + at);
        if (pa.caveat || pb.caveat || pprod.caveat)
            report.skip();
        else
            report.record(pprod.value == mul(pa.value, pb.value), "pi(ab) != pi(a)pi(b)" + at);
    }
    return report;
}

CheckReport verify_seminorm_axioms(const EnhancedSeminorm& e, unsigned long cases,
                                   unsigned trunc_deg, unsigned seed) {
    Rng rng(seed + 7 * e.prime + static_cast<unsigned>(e.kind));
    std::vector<RatSeries> samples;
    samples.reserve(cases);
    for (unsigned long i = 0; i < cases; ++i) samples.push_back(random_rat_series(rng, trunc_deg));
    return check_seminorm_axioms(e, samples);
}

CheckReport verify_enhancement_commutes(const EnhancedSeminorm& e, unsigned long cases,
                                        unsigned trunc_deg, unsigned seed) {
    Rng rng(seed + 13 * e.prime + static_cast<unsigned>(e.kind));
    std::vector<RatSeries> samples;
    samples.reserve(cases);
    for (unsigned long i = 0; i < cases; ++i) samples.push_back(random_rat_series(rng, trunc_deg));
    return check_enhancement_commutes(e, samples);
}

namespace {

ForestExpr random_tree(Rng& rng, unsigned depth_budget, unsigned& leaf_budget, Semiring tag,
                       unsigned var_count) {
    ForestExpr acc = forest_one();
    unsigned width = pick(rng, 1, 3);
    for (unsigned i = 0; i < width && leaf_budget > 0; ++i) {
        switch (pick(rng, 0, depth_budget > 0 ? 2 : 1)) {
            case 0:
                acc = forest_mul(acc, coeff_leaf(random_value(rng, tag, false)));
                --leaf_budget;
                break;
            case 1:
                acc = forest_mul(acc, var_leaf(pick(rng, 0, var_count - 1)));
                --leaf_budget;
                break;
            default:
                acc = forest_mul(acc, forest_d(random_tree(rng, depth_budget - 1, leaf_budget, tag,
                                                           var_count)));
                break;
        }
    }
    return acc;
}

ForestExpr random_forest(Rng& rng, Semiring tag, unsigned var_count) {
    ForestExpr acc = forest_zero();
    unsigned trees = pick(rng, 1, 3);
    unsigned leaf_budget = 6;
    for (unsigned i = 0; i < trees; ++i)
        acc = forest_sum(acc, random_tree(rng, 3, leaf_budget, tag, var_count));
    return acc;
}

}  // namespace

CheckReport verify_forest_soundness(const SeriesDifferential& d, unsigned long cases, unsigned seed) {
    Rng rng(seed + 29 * static_cast<unsigned>(d.kind) + d.prime);
    CheckReport report;
    report.name = "forest-soundness";
    const Semiring tag = (d.kind == SeriesDifferential::Kind::padic_weighted) ? Semiring::pos_rat
                                                                              : Semiring::boolean;
    for (unsigned long i = 0; i < cases; ++i) {
        Assignment asg{tag, d, {random_series(rng, tag, 8), random_series(rng, tag, 8)}};
        ForestExpr f = random_forest(rng, tag, 2);
        ForestExpr g = random_forest(rng, tag, 2);
        std::string at = " at f=" + to_string(f) + " g=" + to_string(g);
        report.record(series_equal_to_common_trunc(eval_forest(normalize(f), asg), eval_forest(f, asg)),
                      "eval(normalize(f)) != eval(f)" + at);
        report.record(eval_forest(forest_sum(f, g), asg) ==
                          series_add(eval_forest(f, asg), eval_forest(g, asg)),
                      "eval not additive" + at);
        report.record(eval_forest(forest_mul(f, g), asg) ==
                          series_mul(eval_forest(f, asg), eval_forest(g, asg)),
                      "eval not multiplicative" + at);
        report.record(eval_forest(forest_d(f), asg) == differentiate(eval_forest(f, asg), d),
                      "eval does not commute with d" + at);
    }
    return report;
}

CheckReport verify_reducedness_witness(unsigned long cases, unsigned trunc_deg, unsigned seed) {
    Rng rng(seed + 3);
    CheckReport report;
    report.name = "reducedness-witness";
    const PairDescriptor pair = boolean_pair();
    for (unsigned long i = 0; i < cases; ++i) {
        TruncSeries a = random_series(rng, Semiring::boolean, trunc_deg);
        TruncSeries b = random_series(rng, Semiring::boolean, trunc_deg);
        if (a == b) {
            b.accumulate(pick(rng, 0, trunc_deg), SemiringValue::boolean(true));
            if (a == b) {
                report.skip();
                continue;
            }
        }
        std::string at = " at a=" + to_string(a) + " b=" + to_string(b);
        auto n = separating_derivative_order(a, b, pair);
        if (!n) {
            report.record(false, "no separating order found" + at);
            continue;
        }
        Projected pa = project(differentiate(a, pair.differential, *n), pair);
        Projected pb = project(differentiate(b, pair.differential, *n), pair);
        report.record(!(pa.value == pb.value) || pa.caveat != pb.caveat,
                      "claimed separating order does not separate" + at);
    }
    return report;
}

CheckReport verify_tropicalization_soundness(const EnhancedSeminorm& e, unsigned deg) {
    CheckReport report;
    report.name = "tropicalization-soundness";
    struct Scenario {
        const char* label;
        std::vector<RatSeries> coeffs;  // c_0 .. c_m
        std::vector<Rat> init;
    };
    const RatSeries one = RatSeries::constant(1);
    const RatSeries minus_one = RatSeries::constant(-1);
    std::vector<Scenario> scenarios{
        {"x' - x = 0, x(0)=1", {minus_one, one}, {Rat(1)}},
        {"x'' + x = 0, x(0)=0, x'(0)=1", {one, RatSeries(), one}, {Rat(0), Rat(1)}},
        {"x'' + x = 0, x(0)=1, x'(0)=0", {one, RatSeries(), one}, {Rat(1), Rat(0)}},
        {"x'' - x = 0, x(0)=1, x'(0)=1", {minus_one, RatSeries(), one}, {Rat(1), Rat(1)}},
    };
    for (const Scenario& sc : scenarios) {
        RatSeries x = solve_linear_ode(sc.coeffs, sc.init, deg);
        RatDiffPoly f;
        for (unsigned i = 0; i < sc.coeffs.size(); ++i)
            if (!sc.coeffs[i].empty()) f.add_term(DiffMonomial::var(0, i), sc.coeffs[i]);
        TropEquation trop = trop_equation(f, e);
        Verdict verdict = is_solution(trop.poly, {enhance(x, e)}, e.pair);
        if (trop.caveat || verdict == Verdict::unknown) {
            report.record(verdict != Verdict::no,
                          std::string("caveat case decided 'no' for ") + sc.label);
            report.skip();
        } else {
            report.record(verdict == Verdict::yes,
                          std::string("tropicalized solution rejected for ") + sc.label);
        }
    }
    return report;
}

CheckReport merge_reports(const std::string& name, const std::vector<CheckReport>& parts) {
    CheckReport out;
    out.name = name;
    for (const CheckReport& r : parts) {
        out.cases += r.cases;
        out.failures += r.failures;
        out.caveat_skips += r.caveat_skips;
        if (out.first_counterexample.empty()) out.first_counterexample = r.first_counterexample;
    }
    return out;
}

}  // namespace tropdiff
