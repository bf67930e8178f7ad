#pragma once

// Basic differential polynomials with coefficients in the bottom semiring of
// a pair, evaluated at tuples of series through the pair's projection, and
// the three-valued solution-membership test.

#include "tropdiff/series.hpp"

#include <map>
#include <utility>
#include <vector>

namespace tropdiff {

// Product of generators x_i^(j); maps (var index, derivative order) to a
// multiplicity >= 1.  The empty map is the monomial 1.
struct DiffMonomial {
    std::map<std::pair<unsigned, unsigned>, unsigned> exponents;

    static DiffMonomial one() { return DiffMonomial{}; }
    static DiffMonomial var(unsigned index, unsigned order = 0, unsigned mult = 1);
    void multiply_in(unsigned index, unsigned order, unsigned mult = 1);
    bool is_one() const { return exponents.empty(); }

    bool operator<(const DiffMonomial& o) const { return exponents < o.exponents; }
    friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;
};

class DiffPoly {
public:
    explicit DiffPoly(Semiring coeff_tag) : tag_(coeff_tag) {}

    Semiring coeff_tag() const { return tag_; }
    const std::map<DiffMonomial, SemiringValue>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Accumulates with (+); zero coefficients are never stored.
    void add_term(const DiffMonomial& m, const SemiringValue& coeff);

    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

private:
    Semiring tag_;
    std::map<DiffMonomial, SemiringValue> terms_;
};

// t-order of a projected value: the n of e^{-n} (trop_exp) or of the first
// component (rank2).  Throws UnsupportedError for ungraded semirings.
Rat t_order(const SemiringValue& v);

// An evaluated quantity that may rest on unknown tail coefficients.  When
// `caveat` is set, `value` holds the known-zero stand-in and `min_order` is
// a lower bound on the t-order of the true value (so an upper bound on the
// value itself); the true value may also be zero outright.
struct BoundedValue {
    SemiringValue value;
    bool caveat = false;
    Rat min_order = 0;
};

// pi(d^{j} C_i)^k multiplied out in S0.  Throws TruncationError when a
// required derivative runs past the known coefficients.
BoundedValue eval_monomial(const DiffMonomial& m, const std::vector<TruncSeries>& point,
                           const PairDescriptor& pair);

struct EvalTerm {
    DiffMonomial monomial;
    SemiringValue coefficient;
    BoundedValue value;
};

struct EvalResult {
    SemiringValue value;          // (+)-sum of the exactly known terms
    std::vector<EvalTerm> terms;
    bool caveat = false;
};

EvalResult eval_poly(const DiffPoly& f, const std::vector<TruncSeries>& point,
                     const PairDescriptor& pair);

enum class Verdict { yes, no, unknown };
const char* verdict_name(Verdict v);

// yes iff the evaluated terms tropically vanish; unknown whenever a
// truncation caveat could flip the removal test either way.
Verdict is_solution(const DiffPoly& f, const std::vector<TruncSeries>& point,
                    const PairDescriptor& pair);

// pi(d^j W) over the boolean pair; W as a boolean series.
Projected grigoriev_val(const TruncSeries& w, unsigned j, const PairDescriptor& pair);

std::string to_string(const DiffMonomial& m);
std::string to_string(const DiffPoly& f);

}  // namespace tropdiff
