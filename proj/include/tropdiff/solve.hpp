#pragma once

// Solution search: brute-force support enumeration over the boolean pair,
// and the one-unknown leading-coefficient solver that walks a series
// template slot by slot over the rank-2 pair.

#include "tropdiff/diffpoly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tropdiff {

struct SupportPattern {
    std::vector<unsigned> support;  // sorted, elements <= max_deg
    friend bool operator==(const SupportPattern&, const SupportPattern&) = default;
};

struct BooleanSolutions {
    std::vector<SupportPattern> yes;
    std::vector<SupportPattern> unknown;
};

// All supports S in {0..max_deg} whose (exactly known) series solve f over
// the boolean pair, ordered by cardinality then lexicographically.  Throws
// ResourceError when the enumeration budget is exceeded.
BooleanSolutions enumerate_boolean_solutions(const DiffPoly& f, unsigned max_deg,
                                             const PairDescriptor& pair);

// Candidate series 1*t^0-led prefix with one symbolic positive unknown c at
// degree `slot`; degrees between the fixed prefix and the slot are zero, and
// everything past the slot is an arbitrary unknown tail.
struct CoeffTemplate {
    std::map<unsigned, Rat> fixed;  // exact positive coefficients, degrees < slot
    unsigned slot = 1;

    static CoeffTemplate leading_one(unsigned slot);
};

// The template instantiated at a concrete c with the tail set to zero, as an
// exactly known series (the re-checkable witness for a verdict).
TruncSeries template_series(const CoeffTemplate& tmpl, const Rat& c, Semiring coeff_tag);

// One evaluated term of f at the template: either an exact rank-2 value
// (e^{-order}, scale * c^c_power), or a tail term whose true t-order is at
// least `order`.
struct SymbolicTerm {
    DiffMonomial monomial;
    bool tail = false;
    Rat order = 0;
    Rat scale = 1;
    unsigned c_power = 0;
};

std::string to_string(const SymbolicTerm& t);

struct SolveVerdict {
    enum class Kind { all_positive_c, single_value, none, unresolved };
    Kind kind = Kind::none;
    std::optional<Rat> c;                // set for single_value
    std::vector<std::string> equations;  // tie equations left open when unresolved

    friend bool operator==(const SolveVerdict&, const SolveVerdict&) = default;
};

const char* verdict_kind_name(SolveVerdict::Kind k);

struct SlotAnalysis {
    SolveVerdict verdict;
    std::vector<SymbolicTerm> terms;
};

// Decides which positive values of the unknown make f tropically vanish at
// the template.  Throws UnsupportedError when f strays outside the supported
// shape (single variable, rank-2 coefficients).
SlotAnalysis solve_leading_coefficient(const DiffPoly& f, const CoeffTemplate& tmpl,
                                       const PairDescriptor& pair);

// Runs the solver for slots 1..max_slot with all earlier slots zeroed,
// reproducing the case-by-case cascade.
std::vector<std::pair<unsigned, SlotAnalysis>> scan_template(const DiffPoly& f, unsigned max_slot,
                                                             const PairDescriptor& pair);

// Exact d-th root of a positive rational if one exists.
std::optional<Rat> rational_root(const Rat& q, unsigned d);

}  // namespace tropdiff
