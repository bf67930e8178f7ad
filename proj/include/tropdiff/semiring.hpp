#pragma once

// Exact values in the concrete idempotent semirings used by the engine:
// the booleans, the tropical semiring in order (-log) encoding, the
// nonnegative rationals under (max, *), and the rank-2 lexicographic
// product of the last two.  All arithmetic is exact; there is no floating
// point anywhere in the core.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tropdiff {

using Rat = mpq_class;

// Canonicalized rational from a numerator/denominator pair.
Rat make_rat(long num, long den = 1);
// Parses "p", "-p", "p/q".  Throws std::invalid_argument on bad input.
Rat rat_from_string(const std::string& text);
std::string rat_to_string(const Rat& q);

class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

// Binary operation applied across two different semirings.
class TagMismatchError : public EngineError {
public:
    using EngineError::EngineError;
};

// A computation ran past the known coefficients of a truncated series.
class TruncationError : public EngineError {
public:
    using EngineError::EngineError;
};

// An enumeration or search exceeded its stated budget.
class ResourceError : public EngineError {
public:
    using EngineError::EngineError;
};

// Input outside the supported fragment (equation shape, template shape, ...).
class UnsupportedError : public EngineError {
public:
    using EngineError::EngineError;
};

class ParseError : public EngineError {
public:
    ParseError(const std::string& what, std::size_t position)
        : EngineError(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

enum class Semiring { boolean, trop_exp, pos_rat, rank2 };

const char* semiring_name(Semiring tag);

// {0, 1} with or/and.
struct BoolVal {
    bool bit = false;
    friend bool operator==(const BoolVal&, const BoolVal&) = default;
};

// e^{-order} for a rational order, or the semiring zero (empty order).
// Addition keeps the smaller order (the larger element), multiplication
// adds orders.
struct TropExpVal {
    std::optional<Rat> order;
    bool is_zero() const { return !order.has_value(); }
    friend bool operator==(const TropExpVal&, const TropExpVal&) = default;
};

// Nonnegative rational under (max, *).
struct PosRatVal {
    Rat value = 0;
    bool is_zero() const { return value == 0; }
    friend bool operator==(const PosRatVal&, const PosRatVal&) = default;
};

// Lexicographic pair (trop_exp part, pos_rat part).  Either both components
// are zero (the semiring zero) or both are nonzero; construction normalizes
// a zero component to the zero pair.
struct Rank2Val {
    TropExpVal first;
    PosRatVal second;
    bool is_zero() const { return first.is_zero(); }
    friend bool operator==(const Rank2Val&, const Rank2Val&) = default;
};

class SemiringValue {
public:
    SemiringValue() : payload_(BoolVal{}) {}

    static SemiringValue zero(Semiring tag);
    static SemiringValue one(Semiring tag);
    static SemiringValue boolean(bool bit);
    // The element e^{-order}.
    static SemiringValue trop_exp(Rat order);
    static SemiringValue trop_exp_zero();
    static SemiringValue pos_rat(Rat value);
    static SemiringValue rank2(Rat order, Rat second);
    static SemiringValue rank2_zero();

    Semiring tag() const;
    bool is_zero() const;
    bool is_one() const;

    const BoolVal& as_bool() const;
    const TropExpVal& as_trop_exp() const;
    const PosRatVal& as_pos_rat() const;
    const Rank2Val& as_rank2() const;

    friend bool operator==(const SemiringValue&, const SemiringValue&) = default;

private:
    explicit SemiringValue(std::variant<BoolVal, TropExpVal, PosRatVal, Rank2Val> payload)
        : payload_(std::move(payload)) {}
    std::variant<BoolVal, TropExpVal, PosRatVal, Rank2Val> payload_;
};

// Idempotent sum.  Throws TagMismatchError unless tags agree.
SemiringValue add(const SemiringValue& a, const SemiringValue& b);
// Product; zero is absorbing.
SemiringValue mul(const SemiringValue& a, const SemiringValue& b);
SemiringValue pow(const SemiringValue& a, unsigned exponent);
// Canonical order: a <= b iff a + b == b.
bool leq(const SemiringValue& a, const SemiringValue& b);
// Strict total-order comparator (all four concrete semirings here are
// totally ordered); used for deterministic printing and max-scans.
bool lt(const SemiringValue& a, const SemiringValue& b);

// Bend test at a point: for every index j the full sum equals the sum with
// term j removed.  A single term passes iff it is zero.  Throws EngineError
// on an empty list and TagMismatchError on mixed tags.
bool trop_vanishes(const std::vector<SemiringValue>& terms);

// Literal formats: boolean "0"/"1"; trop_exp "e^-4", "e^1/2", one as "1";
// pos_rat "8", "1/2"; rank2 "(e^-4, 1)".  Zero is "0" in every semiring.
std::string to_string(const SemiringValue& v);

}  // namespace tropdiff
