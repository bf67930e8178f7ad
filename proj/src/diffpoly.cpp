#include "tropdiff/diffpoly.hpp"

namespace tropdiff {

DiffMonomial DiffMonomial::var(unsigned index, unsigned order, unsigned mult) {
    DiffMonomial m;
    m.multiply_in(index, order, mult);
    return m;
}

void DiffMonomial::multiply_in(unsigned index, unsigned order, unsigned mult) {
    if (mult == 0) return;
    exponents[{index, order}] += mult;
}

void DiffPoly::add_term(const DiffMonomial& m, const SemiringValue& coeff) {
    if (coeff.tag() != tag_) throw TagMismatchError("polynomial coefficient tag mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    SemiringValue next = (it == terms_.end()) ? coeff : add(it->second, coeff);
    if (next.is_zero())
        terms_.erase(m);
    else
        terms_.insert_or_assign(m, next);
}

Rat t_order(const SemiringValue& v) {
    switch (v.tag()) {
        case Semiring::trop_exp:
            if (v.as_trop_exp().is_zero()) throw EngineError("t_order of zero");
            return *v.as_trop_exp().order;
        case Semiring::rank2:
            if (v.as_rank2().is_zero()) throw EngineError("t_order of zero");
            return *v.as_rank2().first.order;
        default:
            throw UnsupportedError("t_order: semiring carries no t-grading");
    }
}

BoundedValue eval_monomial(const DiffMonomial& m, const std::vector<TruncSeries>& point,
                           const PairDescriptor& pair) {
    SemiringValue value = SemiringValue::one(pair.s0_tag);
    bool caveat = false;
    Rat min_order = 0;
    for (const auto& [key, mult] : m.exponents) {
        const auto& [index, order] = key;
        if (index >= point.size())
            throw EngineError("monomial references x" + std::to_string(index + 1) +
                              " but only " + std::to_string(point.size()) +
                              " series were supplied");
        TruncSeries derived = differentiate(point[index], pair.differential, order);
        Projected p = project(derived, pair);
        if (p.caveat) {
            caveat = true;
            // The factor's true leading order, if it is nonzero at all, lies
            // strictly past the known coefficients.
            min_order += Rat(static_cast<long>(*derived.trunc_deg()) + 1) * static_cast<long>(mult);
            continue;
        }
        if (p.value.is_zero()) {
            // Exactly zero factor (series known exactly and empty).
            return BoundedValue{SemiringValue::zero(pair.s0_tag), false, 0};
        }
        min_order += t_order(p.value) * static_cast<long>(mult);
        value = mul(value, pow(p.value, mult));
    }
    if (caveat) return BoundedValue{SemiringValue::zero(pair.s0_tag), true, min_order};
    return BoundedValue{value, false, min_order};
}

EvalResult eval_poly(const DiffPoly& f, const std::vector<TruncSeries>& point,
                     const PairDescriptor& pair) {
    if (f.coeff_tag() != pair.s0_tag)
        throw TagMismatchError("polynomial coefficients do not live in the pair's S0");
    EvalResult out;
    out.value = SemiringValue::zero(pair.s0_tag);
    for (const auto& [mono, coeff] : f.terms()) {
        BoundedValue mv = eval_monomial(mono, point, pair);
        BoundedValue tv;
        tv.caveat = mv.caveat;
        if (mv.caveat) {
            tv.value = SemiringValue::zero(pair.s0_tag);
            tv.min_order = t_order(coeff) + mv.min_order;
            out.caveat = true;
        } else {
            tv.value = mul(coeff, mv.value);
            tv.min_order = tv.value.is_zero() ? Rat(0) : t_order(tv.value);
            out.value = add(out.value, tv.value);
        }
        out.terms.push_back(EvalTerm{mono, coeff, tv});
    }
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

Verdict is_solution(const DiffPoly& f, const std::vector<TruncSeries>& point,
                    const PairDescriptor& pair) {
    if (f.is_zero()) return Verdict::yes;  // empty sum vanishes
    EvalResult ev;
    try {
        ev = eval_poly(f, point, pair);
    } catch (const TruncationError&) {
        return Verdict::unknown;
    }
    std::vector<SemiringValue> exact;
    for (const auto& t : ev.terms)
        if (!t.value.caveat) exact.push_back(t.value.value);
    if (!ev.caveat) return trop_vanishes(exact) ? Verdict::yes : Verdict::no;
    // Some terms rest on unknown tails.  They are harmless exactly when they
    // sit strictly below the known maximum in every completion, which the
    // t-order bound certifies.
    if (exact.empty()) return Verdict::unknown;
    SemiringValue max = SemiringValue::zero(pair.s0_tag);
    for (const auto& v : exact) max = add(max, v);
    if (max.is_zero()) return Verdict::unknown;
    Rat max_order = t_order(max);
    for (const auto& t : ev.terms)
        if (t.value.caveat && t.value.min_order <= max_order) return Verdict::unknown;
    return trop_vanishes(exact) ? Verdict::yes : Verdict::no;
}

Projected grigoriev_val(const TruncSeries& w, unsigned j, const PairDescriptor& pair) {
    if (pair.projection != PairDescriptor::Projection::boolean_leading_exponent)
        throw UnsupportedError("grigoriev_val is defined over the boolean pair");
    return project(differentiate(w, pair.differential, j), pair);
}

std::string to_string(const DiffMonomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [key, mult] : m.exponents) {
        const auto& [index, order] = key;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(index + 1);
        if (order == 1)
            out += "'";
        else if (order == 2)
            out += "''";
        else if (order >= 3)
            out += "^(" + std::to_string(order) + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

std::string to_string(const DiffPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : f.terms()) {
        if (!out.empty()) out += " + ";
        if (mono.is_one()) {
            out += to_string(coeff);
        } else if (coeff.is_one()) {
            out += to_string(mono);
        } else {
            out += to_string(coeff) + "*" + to_string(mono);
        }
    }
    return out;
}

}  // namespace tropdiff
