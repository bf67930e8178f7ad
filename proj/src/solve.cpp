#include "tropdiff/solve.hpp"

#include <algorithm>
#include <set>

namespace tropdiff {

BooleanSolutions enumerate_boolean_solutions(const DiffPoly& f, unsigned max_deg,
                                             const PairDescriptor& pair) {
    if (pair.projection != PairDescriptor::Projection::boolean_leading_exponent)
        throw UnsupportedError("support enumeration runs over the boolean pair");
    if (max_deg > 16)
        throw ResourceError("enumeration over 2^" + std::to_string(max_deg + 1) +
                            " supports exceeds the budget (max_deg <= 16)");
    if (f.terms().size() > 32)
        throw ResourceError("equation has too many monomials for enumeration");

    std::vector<SupportPattern> patterns;
    patterns.reserve(1u << (max_deg + 1));
    for (unsigned long mask = 0; mask < (1ul << (max_deg + 1)); ++mask) {
        SupportPattern p;
        for (unsigned d = 0; d <= max_deg; ++d)
            if (mask & (1ul << d)) p.support.push_back(d);
        patterns.push_back(std::move(p));
    }
    std::sort(patterns.begin(), patterns.end(), [](const SupportPattern& a, const SupportPattern& b) {
        if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
        return a.support < b.support;
    });

    BooleanSolutions out;
    for (SupportPattern& p : patterns) {
        TruncSeries w(Semiring::boolean, std::nullopt);
        for (unsigned d : p.support) w.accumulate(d, SemiringValue::boolean(true));
        switch (is_solution(f, {w}, pair)) {
            case Verdict::yes: out.yes.push_back(std::move(p)); break;
            case Verdict::unknown: out.unknown.push_back(std::move(p)); break;
            case Verdict::no: break;
        }
    }
    return out;
}

CoeffTemplate CoeffTemplate::leading_one(unsigned slot) {
    CoeffTemplate t;
    t.fixed[0] = 1;
    t.slot = slot;
    return t;
}

TruncSeries template_series(const CoeffTemplate& tmpl, const Rat& c, Semiring coeff_tag) {
    TruncSeries s(coeff_tag, std::nullopt);
    for (const auto& [deg, a] : tmpl.fixed) s.accumulate(deg, SemiringValue::pos_rat(a));
    s.accumulate(tmpl.slot, SemiringValue::pos_rat(c));
    return s;
}

std::string to_string(const SymbolicTerm& t) {
    auto e_part = [](const Rat& order) {
        if (order == 0) return std::string("1");
        return "e^" + rat_to_string(Rat(-order));
    };
    if (t.tail) return "O(" + e_part(t.order) + ")";
    std::string c_part;
    if (t.c_power == 0) {
        c_part = rat_to_string(t.scale);
    } else {
        std::string cs = (t.c_power == 1) ? "c" : "c^" + std::to_string(t.c_power);
        c_part = (t.scale == 1) ? cs : rat_to_string(t.scale) + cs;
    }
    return "(" + e_part(t.order) + ", " + c_part + ")";
}

const char* verdict_kind_name(SolveVerdict::Kind k) {
    switch (k) {
        case SolveVerdict::Kind::all_positive_c: return "all_positive_c";
        case SolveVerdict::Kind::single_value: return "single_value";
        case SolveVerdict::Kind::none: return "none";
        case SolveVerdict::Kind::unresolved: return "unresolved";
    }
    return "?";
}

std::optional<Rat> rational_root(const Rat& q, unsigned d) {
    if (q <= 0 || d == 0) return std::nullopt;
    mpz_class num_root, den_root;
    bool num_exact = mpz_root(num_root.get_mpz_t(), q.get_num().get_mpz_t(), d) != 0;
    bool den_exact = mpz_root(den_root.get_mpz_t(), q.get_den().get_mpz_t(), d) != 0;
    if (!num_exact || !den_exact) return std::nullopt;
    Rat r(num_root, den_root);
    r.canonicalize();
    return r;
}

namespace {

// One projected factor pi(d^j x) at the template: exact leading data, or a
// bound when the leading term sits in the unknown tail.
struct SymFactor {
    bool tail = false;
    Rat order = 0;
    Rat scale = 1;
    bool uses_c = false;
};

Rat weight_product(unsigned deg, unsigned j, const SeriesDifferential& d) {
    Rat acc = 1;
    for (unsigned l = deg - j + 1; l <= deg; ++l)
        acc *= d.weight(l, Semiring::pos_rat).as_pos_rat().value;
    return acc;
}

SymFactor eval_factor(unsigned j, const CoeffTemplate& tmpl, const SeriesDifferential& d) {
    std::optional<SymFactor> best;
    auto consider = [&](unsigned deg, const Rat& base, bool uses_c) {
        if (deg < j) return;
        Rat w = weight_product(deg, j, d);
        if (w == 0) return;
        SymFactor f{false, Rat(static_cast<long>(deg - j)), Rat(base * w), uses_c};
        if (!best || f.order < best->order) best = f;
    };
    for (const auto& [deg, a] : tmpl.fixed) consider(deg, a, false);
    consider(tmpl.slot, 1, true);
    Rat tail_bound = (tmpl.slot + 1 > j) ? Rat(static_cast<long>(tmpl.slot + 1 - j)) : Rat(0);
    if (best && best->order < tail_bound) return *best;
    return SymFactor{true, tail_bound, 1, false};
}

std::string monomial_string(const Rat& scale, unsigned c_power) {
    if (c_power == 0) return rat_to_string(scale);
    std::string cs = (c_power == 1) ? "c" : "c^" + std::to_string(c_power);
    return (scale == 1) ? cs : rat_to_string(scale) + "*" + cs;
}

Rat rat_pow(const Rat& base, unsigned k) {
    Rat acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= base;
    return acc;
}

SolveVerdict analyze_terms(const std::vector<SymbolicTerm>& terms) {
    if (terms.empty()) return SolveVerdict{SolveVerdict::Kind::all_positive_c, std::nullopt, {}};

    std::vector<const SymbolicTerm*> exact;
    for (const auto& t : terms)
        if (!t.tail) exact.push_back(&t);
    if (exact.empty())
        return SolveVerdict{SolveVerdict::Kind::unresolved, std::nullopt,
                            {"every term depends on the unknown tail"}};
    Rat top = exact.front()->order;
    for (const auto* t : exact) top = std::min(top, t->order);
    for (const auto& t : terms)
        if (t.tail && t.order <= top)
            return SolveVerdict{SolveVerdict::Kind::unresolved, std::nullopt,
                                {"an unknown tail term can reach the maximal order e^" +
                                 rat_to_string(Rat(-top))}};

    std::vector<const SymbolicTerm*> at_top;
    for (const auto* t : exact)
        if (t->order == top) at_top.push_back(t);

    if (at_top.size() == 1)
        return SolveVerdict{SolveVerdict::Kind::none, std::nullopt, {}};

    bool same_power = std::all_of(at_top.begin(), at_top.end(), [&](const SymbolicTerm* t) {
        return t->c_power == at_top.front()->c_power;
    });
    if (same_power) {
        // c scales every maximal term alike; the tie pattern is c-independent.
        Rat max_scale = at_top.front()->scale;
        for (const auto* t : at_top) max_scale = std::max(max_scale, t->scale);
        int hits = 0;
        for (const auto* t : at_top)
            if (t->scale == max_scale) ++hits;
        if (hits >= 2) return SolveVerdict{SolveVerdict::Kind::all_positive_c, std::nullopt, {}};
        return SolveVerdict{SolveVerdict::Kind::none, std::nullopt, {}};
    }

    // Mixed powers of c: collect the pairwise crossings.
    std::set<Rat> candidates;
    std::vector<std::string> open_equations;
    bool has_identical_pair = false;
    for (std::size_t i = 0; i < at_top.size(); ++i) {
        for (std::size_t j = i + 1; j < at_top.size(); ++j) {
            const SymbolicTerm& a = *at_top[i];
            const SymbolicTerm& b = *at_top[j];
            if (a.c_power == b.c_power) {
                if (a.scale == b.scale) has_identical_pair = true;
                continue;
            }
            unsigned d = (a.c_power > b.c_power) ? a.c_power - b.c_power : b.c_power - a.c_power;
            Rat ratio = (a.c_power > b.c_power) ? Rat(b.scale / a.scale) : Rat(a.scale / b.scale);
            if (auto root = rational_root(ratio, d)) {
                candidates.insert(*root);
            } else {
                open_equations.push_back(monomial_string(a.scale, a.c_power) + " = " +
                                         monomial_string(b.scale, b.c_power));
            }
        }
    }

    std::vector<Rat> verified;
    for (const Rat& c : candidates) {
        Rat max_val = 0;
        for (const auto* t : at_top) max_val = std::max(max_val, Rat(t->scale * rat_pow(c, t->c_power)));
        int hits = 0;
        for (const auto* t : at_top)
            if (t->scale * rat_pow(c, t->c_power) == max_val) ++hits;
        if (hits >= 2) verified.push_back(c);
    }

    // An identical pair among mixed powers ties for every c and is maximal
    // on whatever range it dominates; that solution set has no place in the
    // verdict vocabulary, so it stays open.
    if (has_identical_pair) {
        std::vector<std::string> eqs = open_equations;
        for (const Rat& c : verified) eqs.push_back("c = " + rat_to_string(c));
        eqs.push_back("a pair of identical monomials ties on a range of c");
        return SolveVerdict{SolveVerdict::Kind::unresolved, std::nullopt, eqs};
    }
    if (verified.size() == 1 && open_equations.empty())
        return SolveVerdict{SolveVerdict::Kind::single_value, verified.front(), {}};
    if (verified.empty() && open_equations.empty())
        return SolveVerdict{SolveVerdict::Kind::none, std::nullopt, {}};

    std::vector<std::string> eqs = open_equations;
    for (const Rat& c : verified) eqs.push_back("c = " + rat_to_string(c));
    return SolveVerdict{SolveVerdict::Kind::unresolved, std::nullopt, eqs};
}

}  // namespace

SlotAnalysis solve_leading_coefficient(const DiffPoly& f, const CoeffTemplate& tmpl,
                                       const PairDescriptor& pair) {
    if (pair.projection != PairDescriptor::Projection::rank2_leading_term)
        throw UnsupportedError("the leading-coefficient solver runs over the rank-2 pair");
    if (f.coeff_tag() != Semiring::rank2)
        throw TagMismatchError("equation coefficients must be rank2 values");
    if (tmpl.slot == 0) throw UnsupportedError("template slot must have degree >= 1");
    for (const auto& [deg, a] : tmpl.fixed) {
        if (deg >= tmpl.slot)
            throw UnsupportedError("fixed template coefficients must sit below the slot");
        if (a <= 0) throw UnsupportedError("fixed template coefficients must be positive");
    }

    SlotAnalysis out;
    for (const auto& [mono, coeff] : f.terms()) {
        SymbolicTerm term;
        term.monomial = mono;
        term.order = t_order(coeff);
        term.scale = coeff.as_rank2().second.value;
        for (const auto& [key, mult] : mono.exponents) {
            const auto& [index, order] = key;
            if (index != 0)
                throw UnsupportedError("the template solver supports a single variable x1");
            SymFactor factor = eval_factor(order, tmpl, pair.differential);
            term.order += factor.order * static_cast<long>(mult);
            if (factor.tail) {
                term.tail = true;
            } else {
                term.scale *= rat_pow(factor.scale, mult);
                if (factor.uses_c) term.c_power += mult;
            }
        }
        if (term.tail) {
            term.scale = 1;
            term.c_power = 0;
        }
        out.terms.push_back(std::move(term));
    }
    out.verdict = analyze_terms(out.terms);
    return out;
}

std::vector<std::pair<unsigned, SlotAnalysis>> scan_template(const DiffPoly& f, unsigned max_slot,
                                                             const PairDescriptor& pair) {
    std::vector<std::pair<unsigned, SlotAnalysis>> out;
    for (unsigned slot = 1; slot <= max_slot; ++slot)
        out.emplace_back(slot, solve_leading_coefficient(f, CoeffTemplate::leading_one(slot), pair));
    return out;
}

}  // namespace tropdiff
