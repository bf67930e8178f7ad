#pragma once

// The classical side: exact truncated rational power series with d/dt,
// non-archimedean seminorms on them (t-adic and p-adic rank-2), the
// differential enhancements that lift those seminorms to series of norms,
// axiom checkers, and tropicalization of points and equations.

#include "tropdiff/diffpoly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tropdiff {

// Truncated power series over Q.  Same truncation semantics as TruncSeries:
// absent entries below trunc_deg are known zeros, entries above are unknown,
// trunc_deg == nullopt means exact.
class RatSeries {
public:
    explicit RatSeries(std::optional<unsigned> trunc_deg = std::nullopt) : trunc_(trunc_deg) {}

    std::optional<unsigned> trunc_deg() const { return trunc_; }
    bool is_exact() const { return !trunc_.has_value(); }
    const std::map<unsigned, Rat>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    void accumulate(unsigned degree, const Rat& value);
    Rat coeff(unsigned degree) const;

    static RatSeries constant(const Rat& c);

    friend bool operator==(const RatSeries&, const RatSeries&) = default;

private:
    std::optional<unsigned> trunc_;
    std::map<unsigned, Rat> coeffs_;
};

RatSeries rat_add(const RatSeries& a, const RatSeries& b);
RatSeries rat_sub(const RatSeries& a, const RatSeries& b);
RatSeries rat_mul(const RatSeries& a, const RatSeries& b);
// d/dt; throws TruncationError at trunc_deg 0.
RatSeries rat_ddt(const RatSeries& a);
RatSeries rat_ddt(const RatSeries& a, unsigned times);
bool rat_equal_to_common_trunc(const RatSeries& a, const RatSeries& b);
std::string to_string(const RatSeries& s);

// Differential polynomial over Q[[t]]: coefficients are rational series
// (plain rationals embed as constants).
class RatDiffPoly {
public:
    const std::map<DiffMonomial, RatSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const DiffMonomial& m, const RatSeries& coeff);

    friend bool operator==(const RatDiffPoly&, const RatDiffPoly&) = default;

private:
    std::map<DiffMonomial, RatSeries> terms_;
};

std::string to_string(const RatDiffPoly& f);

// A seminorm on Q[[t]] together with its differential enhancement:
//   grigoriev    - t-adic norm into trop_exp, enhanced by the support series
//                  in B[[t]] with the strict shift;
//   padic_rank2  - rank-2 extension of |.|_p into rank2, enhanced by the
//                  series of coefficient norms in pos_rat[[t]] with the
//                  p-adic weighted shift.
struct EnhancedSeminorm {
    enum class Kind { grigoriev, padic_rank2 };
    Kind kind = Kind::grigoriev;
    unsigned prime = 2;  // meaningful for padic_rank2 only
    PairDescriptor pair;

    static EnhancedSeminorm grigoriev();
    static EnhancedSeminorm padic_rank2(unsigned prime);

    friend bool operator==(const EnhancedSeminorm&, const EnhancedSeminorm&) = default;
};

// The lift into S1: support series (grigoriev) or coefficientwise p-adic
// norms (padic_rank2).  Not multiplicative in general.
TruncSeries enhance(const RatSeries& a, const EnhancedSeminorm& e);

// The seminorm itself: project(enhance(a)).  Caveat when a vanishes within
// its truncation.
Projected value(const RatSeries& a, const EnhancedSeminorm& e);

struct CheckReport {
    std::string name;
    unsigned long cases = 0;
    unsigned long failures = 0;
    unsigned long caveat_skips = 0;
    std::string first_counterexample;
    bool pass() const { return failures == 0; }

    void record(bool ok, const std::string& detail);
    void skip() { ++caveat_skips; }
};

// Verifies v(0)=0, v(1)=v(-1)=1, multiplicativity, and the ultrametric
// identity v(a+b)+v(a)+v(b) = v(a)+v(b) on all sampled pairs.
CheckReport check_seminorm_axioms(const EnhancedSeminorm& e, const std::vector<RatSeries>& samples);
// Same axioms for |.|_p on sampled rationals.
CheckReport check_padic_axioms(unsigned prime, const std::vector<Rat>& samples);
// Def-style axioms for the differential's weight function on naturals up to
// max_n (restriction of a seminorm to N: zero at 0, unital at 1,
// multiplicative, ultrametric).
CheckReport check_weight_seminorm(const SeriesDifferential& d, Semiring tag, unsigned max_n);
// Checks enhance(d/dt a) == d_{S1}(enhance(a)) up to the common truncation.
CheckReport check_enhancement_commutes(const EnhancedSeminorm& e, const std::vector<RatSeries>& samples);

struct TropEquation {
    DiffPoly poly;
    bool caveat = false;  // a coefficient vanished within truncation
};

// Applies the seminorm coefficient-wise: c_alpha * x^alpha maps to
// value(c_alpha) * x^alpha; exact zeros are dropped.
TropEquation trop_equation(const RatDiffPoly& f, const EnhancedSeminorm& e);

// Tropicalization of a point: enhance coordinate-wise.
std::vector<TruncSeries> trop_point(const std::vector<RatSeries>& p, const EnhancedSeminorm& e);

// Unique truncated series solution of sum_i coeffs[i] * x^(i) = 0 with the
// given initial series coefficients a_0..a_{m-1} (m = coeffs.size() - 1).
// The leading coefficient must have a nonzero constant term.
RatSeries solve_linear_ode(const std::vector<RatSeries>& coeffs, const std::vector<Rat>& init,
                           unsigned deg);

}  // namespace tropdiff
