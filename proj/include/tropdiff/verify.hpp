#pragma once

// Randomized law suites with fixed seeds: semiring laws, tropical Leibniz,
// projection homomorphism, seminorm axioms, enhancement commutation, forest
// evaluation soundness, reducedness witnesses, and tropicalization
// soundness for classically solved linear equations.

#include "tropdiff/forest.hpp"
#include "tropdiff/seminorm.hpp"
#include "tropdiff/solve.hpp"

namespace tropdiff {

constexpr unsigned kVerifySeed = 9214;

// Idempotency, unit/absorption, commutativity, associativity,
// distributivity, the canonical partial order, and the bend-test
// invariances, on random values of one semiring.
CheckReport verify_semiring_laws(Semiring tag, unsigned long cases, unsigned seed = kVerifySeed);

// Bend relations of d(ab) + a·d(b) + b·d(a) on random series pairs, the
// four-term variant on triples, and (for the strict shift) the exact
// Leibniz identity.
CheckReport verify_leibniz(const SeriesDifferential& d, Semiring tag, unsigned long pair_cases,
                           unsigned long triple_cases, unsigned trunc_deg = 12,
                           unsigned seed = kVerifySeed);

// project(a+b) = project(a)+project(b) and likewise for products; caveat
// cases are skipped and counted.
CheckReport verify_projection_hom(const PairDescriptor& pair, unsigned long cases,
                                  unsigned trunc_deg = 12, unsigned seed = kVerifySeed);

// Seminorm axioms for value(., e) on random rational series.
CheckReport verify_seminorm_axioms(const EnhancedSeminorm& e, unsigned long cases,
                                   unsigned trunc_deg = 12, unsigned seed = kVerifySeed);

// enhance(d/dt a) = d(enhance(a)) on random rational series.
CheckReport verify_enhancement_commutes(const EnhancedSeminorm& e, unsigned long cases,
                                        unsigned trunc_deg = 12, unsigned seed = kVerifySeed);

// eval respects normalize, sums, products, and the differential on random
// forests and assignments.
CheckReport verify_forest_soundness(const SeriesDifferential& d, unsigned long cases,
                                    unsigned seed = kVerifySeed);

// Distinct boolean series get a finite separating derivative order, and the
// returned order is re-verified directly.
CheckReport verify_reducedness_witness(unsigned long cases, unsigned trunc_deg = 10,
                                       unsigned seed = kVerifySeed);

// Solves x' - x, x'' + x (both initial slopes), and x'' - x classically,
// tropicalizes solution and equation under the given enhancement, and
// demands a yes wherever no caveat fires (never a no).
CheckReport verify_tropicalization_soundness(const EnhancedSeminorm& e, unsigned deg = 12);

CheckReport merge_reports(const std::string& name, const std::vector<CheckReport>& parts);

}  // namespace tropdiff
