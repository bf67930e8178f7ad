#pragma once

// Truncated power series over a coefficient semiring, the differentials that
// act on them, and the projections to leading-order data that make up the
// two concrete pairs of the engine: boolean series over the strict shift
// projecting to trop_exp, and pos_rat series over a norm-weighted shift
// projecting to rank2.

#include "tropdiff/semiring.hpp"

#include <map>
#include <optional>

namespace tropdiff {

constexpr unsigned kDefaultTruncDeg = 16;

// t^n -> t^{n-1} unchanged (strict shift), t^n -> |n|_p t^{n-1} (p-adic
// weight), or t^n -> t^{n-1} when p does not divide n and 0 otherwise
// (degenerate weight).  In every case t^0 -> 0.
struct SeriesDifferential {
    enum class Kind { strict_shift, padic_weighted, degenerate_padic };
    Kind kind = Kind::strict_shift;
    unsigned prime = 2;

    static SeriesDifferential strict_shift();
    static SeriesDifferential padic(unsigned prime);
    static SeriesDifferential degenerate(unsigned prime);

    // The weight applied to the degree-n coefficient, as an element of the
    // coefficient semiring `tag`.  The p-adic weight needs rational values
    // and is rejected over the boolean coefficients.
    SemiringValue weight(unsigned n, Semiring tag) const;

    friend bool operator==(const SeriesDifferential&, const SeriesDifferential&) = default;
};

// |q|_p as an exact rational; |0|_p = 0.  Throws EngineError if p is not prime.
Rat padic_norm(const Rat& q, unsigned p);
bool is_prime(unsigned p);

// Coefficients of degree > trunc_deg are unknown, not zero; absent entries
// at degrees <= trunc_deg are known zeros.  trunc_deg == nullopt means the
// series is known exactly at every degree (all absent entries are zero).
class TruncSeries {
public:
    TruncSeries(Semiring coeff_tag, std::optional<unsigned> trunc_deg = kDefaultTruncDeg)
        : tag_(coeff_tag), trunc_(trunc_deg) {}

    Semiring coeff_tag() const { return tag_; }
    std::optional<unsigned> trunc_deg() const { return trunc_; }
    bool is_exact() const { return !trunc_.has_value(); }
    const std::map<unsigned, SemiringValue>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    // Accumulates with (+); degrees beyond trunc_deg are dropped, zeros are
    // never stored.
    void accumulate(unsigned degree, const SemiringValue& value);
    SemiringValue coeff(unsigned degree) const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    Semiring tag_;
    std::optional<unsigned> trunc_;
    std::map<unsigned, SemiringValue> coeffs_;
};

// Coefficientwise (+); result truncation is the coarser of the two.
TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
// Cauchy convolution with (+)-accumulation.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
// Throws TruncationError when the series has no known coefficients left to
// differentiate (trunc_deg == 0).
TruncSeries differentiate(const TruncSeries& a, const SeriesDifferential& d);
TruncSeries differentiate(const TruncSeries& a, const SeriesDifferential& d, unsigned times);

// Same known coefficients up to the coarser truncation (exact series compare
// at every stored degree of the other side).
bool series_equal_to_common_trunc(const TruncSeries& a, const TruncSeries& b);

// Bend test for a list of series: the coefficientwise removal test, applied
// up to the common truncation of the summands.
bool series_bend_holds(const std::vector<TruncSeries>& terms);

struct PairDescriptor {
    enum class Projection { boolean_leading_exponent, rank2_leading_term };
    Semiring coeff_tag;              // coefficient semiring of S1
    SeriesDifferential differential; // differential on S1
    Semiring s0_tag;                 // target of pi
    Projection projection;

    friend bool operator==(const PairDescriptor&, const PairDescriptor&) = default;
};

// B[[t]] with the strict shift, projecting t^n -> e^{-n} into trop_exp.
PairDescriptor boolean_pair();
// pos_rat[[t]] with the p-adic weighted shift, projecting the leading term
// a t^{n} -> (e^{-n}, a) into rank2.
PairDescriptor rank2_pair(unsigned prime);

// Projection result.  `caveat` is set when the series is empty within its
// truncation: the reported zero may hide support beyond trunc_deg, and
// callers must not let it harden into a yes/no verdict.
struct Projected {
    SemiringValue value;
    bool caveat = false;
    friend bool operator==(const Projected&, const Projected&) = default;
};

Projected project(const TruncSeries& a, const PairDescriptor& pair);

// Least n with project(d^n a) != project(d^n b), or nullopt if the series
// cannot be separated within the available truncation.
std::optional<unsigned> separating_derivative_order(const TruncSeries& a,
                                                    const TruncSeries& b,
                                                    const PairDescriptor& pair);

// "1 + (1/2)t^2 + 8t^5"; boolean series print as support sets "{0, 2, 5}".
// Truncated series carry a trailing " + O(t^k)" with k = trunc_deg + 1.
std::string to_string(const TruncSeries& s);

// Constant series c*t^0, known exactly.
TruncSeries constant_series(const SemiringValue& c);

}  // namespace tropdiff
