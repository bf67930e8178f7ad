#include "tropdiff/semiring.hpp"

#include <algorithm>
#include <cctype>

namespace tropdiff {

Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& text) {
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               body.end());
    if (body.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(body, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

const char* semiring_name(Semiring tag) {
    switch (tag) {
        case Semiring::boolean: return "boolean";
        case Semiring::trop_exp: return "trop_exp";
        case Semiring::pos_rat: return "pos_rat";
        case Semiring::rank2: return "rank2";
    }
    return "?";
}

SemiringValue SemiringValue::zero(Semiring tag) {
    switch (tag) {
        case Semiring::boolean: return boolean(false);
        case Semiring::trop_exp: return trop_exp_zero();
        case Semiring::pos_rat: return pos_rat(0);
        case Semiring::rank2: return rank2_zero();
    }
    throw EngineError("unknown semiring tag");
}

SemiringValue SemiringValue::one(Semiring tag) {
    switch (tag) {
        case Semiring::boolean: return boolean(true);
        case Semiring::trop_exp: return trop_exp(0);
        case Semiring::pos_rat: return pos_rat(1);
        case Semiring::rank2: return rank2(0, 1);
    }
    throw EngineError("unknown semiring tag");
}

SemiringValue SemiringValue::boolean(bool bit) {
    return SemiringValue(BoolVal{bit});
}

SemiringValue SemiringValue::trop_exp(Rat order) {
    return SemiringValue(TropExpVal{std::move(order)});
}

SemiringValue SemiringValue::trop_exp_zero() {
    return SemiringValue(TropExpVal{std::nullopt});
}

SemiringValue SemiringValue::pos_rat(Rat value) {
    if (value < 0) throw EngineError("pos_rat value must be nonnegative");
    return SemiringValue(PosRatVal{std::move(value)});
}

SemiringValue SemiringValue::rank2(Rat order, Rat second) {
    if (second < 0) throw EngineError("rank2 second component must be nonnegative");
    if (second == 0) return rank2_zero();
    return SemiringValue(Rank2Val{TropExpVal{std::move(order)}, PosRatVal{std::move(second)}});
}

SemiringValue SemiringValue::rank2_zero() {
    return SemiringValue(Rank2Val{TropExpVal{std::nullopt}, PosRatVal{0}});
}

Semiring SemiringValue::tag() const {
    switch (payload_.index()) {
        case 0: return Semiring::boolean;
        case 1: return Semiring::trop_exp;
        case 2: return Semiring::pos_rat;
        default: return Semiring::rank2;
    }
}

bool SemiringValue::is_zero() const {
    return *this == zero(tag());
}

bool SemiringValue::is_one() const {
    return *this == one(tag());
}

const BoolVal& SemiringValue::as_bool() const { return std::get<BoolVal>(payload_); }
const TropExpVal& SemiringValue::as_trop_exp() const { return std::get<TropExpVal>(payload_); }
const PosRatVal& SemiringValue::as_pos_rat() const { return std::get<PosRatVal>(payload_); }
const Rank2Val& SemiringValue::as_rank2() const { return std::get<Rank2Val>(payload_); }

namespace {

void require_same_tag(const SemiringValue& a, const SemiringValue& b, const char* op) {
    if (a.tag() != b.tag())
        throw TagMismatchError(std::string(op) + ": " + semiring_name(a.tag()) +
                               " vs " + semiring_name(b.tag()));
}

// e^{-x} is decreasing in x, so the smaller order is the larger element.
TropExpVal trop_add(const TropExpVal& a, const TropExpVal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return (*a.order <= *b.order) ? a : b;
}

TropExpVal trop_mul(const TropExpVal& a, const TropExpVal& b) {
    if (a.is_zero() || b.is_zero()) return TropExpVal{};
    return TropExpVal{*a.order + *b.order};
}

Rank2Val rank2_add(const Rank2Val& a, const Rank2Val& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (*a.first.order != *b.first.order)
        return (*a.first.order < *b.first.order) ? a : b;
    return (a.second.value >= b.second.value) ? a : b;
}

Rank2Val rank2_mul(const Rank2Val& a, const Rank2Val& b) {
    if (a.is_zero() || b.is_zero()) return Rank2Val{};
    return Rank2Val{trop_mul(a.first, b.first),
                    PosRatVal{a.second.value * b.second.value}};
}

}  // namespace

SemiringValue add(const SemiringValue& a, const SemiringValue& b) {
    require_same_tag(a, b, "add");
    switch (a.tag()) {
        case Semiring::boolean:
            return SemiringValue::boolean(a.as_bool().bit || b.as_bool().bit);
        case Semiring::trop_exp: {
            TropExpVal r = trop_add(a.as_trop_exp(), b.as_trop_exp());
            return r.is_zero() ? SemiringValue::trop_exp_zero()
                               : SemiringValue::trop_exp(*r.order);
        }
        case Semiring::pos_rat:
            return SemiringValue::pos_rat(std::max(a.as_pos_rat().value, b.as_pos_rat().value));
        case Semiring::rank2: {
            Rank2Val r = rank2_add(a.as_rank2(), b.as_rank2());
            return r.is_zero() ? SemiringValue::rank2_zero()
                               : SemiringValue::rank2(*r.first.order, r.second.value);
        }
    }
    throw EngineError("unknown semiring tag");
}

SemiringValue mul(const SemiringValue& a, const SemiringValue& b) {
    require_same_tag(a, b, "mul");
    switch (a.tag()) {
        case Semiring::boolean:
            return SemiringValue::boolean(a.as_bool().bit && b.as_bool().bit);
        case Semiring::trop_exp: {
            TropExpVal r = trop_mul(a.as_trop_exp(), b.as_trop_exp());
            return r.is_zero() ? SemiringValue::trop_exp_zero()
                               : SemiringValue::trop_exp(*r.order);
        }
        case Semiring::pos_rat:
            return SemiringValue::pos_rat(a.as_pos_rat().value * b.as_pos_rat().value);
        case Semiring::rank2: {
            Rank2Val r = rank2_mul(a.as_rank2(), b.as_rank2());
            return r.is_zero() ? SemiringValue::rank2_zero()
                               : SemiringValue::rank2(*r.first.order, r.second.value);
        }
    }
    throw EngineError("unknown semiring tag");
}

SemiringValue pow(const SemiringValue& a, unsigned exponent) {
    SemiringValue acc = SemiringValue::one(a.tag());
    for (unsigned i = 0; i < exponent; ++i) acc = mul(acc, a);
    return acc;
}

bool leq(const SemiringValue& a, const SemiringValue& b) {
    require_same_tag(a, b, "leq");
    return add(a, b) == b;
}

bool lt(const SemiringValue& a, const SemiringValue& b) {
    return !(a == b) && leq(a, b);
}

bool trop_vanishes(const std::vector<SemiringValue>& terms) {
    if (terms.empty()) throw EngineError("trop_vanishes: empty term list");
    const Semiring tag = terms.front().tag();
    SemiringValue total = SemiringValue::zero(tag);
    for (const auto& t : terms) {
        require_same_tag(terms.front(), t, "trop_vanishes");
        total = add(total, t);
    }
    for (std::size_t j = 0; j < terms.size(); ++j) {
        SemiringValue rest = SemiringValue::zero(tag);
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (i != j) rest = add(rest, terms[i]);
        if (!(rest == total)) return false;
    }
    return true;
}

namespace {

std::string trop_exp_to_string(const TropExpVal& v) {
    if (v.is_zero()) return "0";
    if (*v.order == 0) return "1";
    return "e^" + rat_to_string(-*v.order);
}

}  // namespace

std::string to_string(const SemiringValue& v) {
    switch (v.tag()) {
        case Semiring::boolean:
            return v.as_bool().bit ? "1" : "0";
        case Semiring::trop_exp:
            return trop_exp_to_string(v.as_trop_exp());
        case Semiring::pos_rat:
            return rat_to_string(v.as_pos_rat().value);
        case Semiring::rank2: {
            const auto& r = v.as_rank2();
            if (r.is_zero()) return "0";
            return "(" + trop_exp_to_string(r.first) + ", " +
                   rat_to_string(r.second.value) + ")";
        }
    }
    return "?";
}

}  // namespace tropdiff
