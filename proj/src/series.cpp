#include "tropdiff/series.hpp"

#include <algorithm>

namespace tropdiff {

SeriesDifferential SeriesDifferential::strict_shift() {
    return SeriesDifferential{Kind::strict_shift, 0};
}

SeriesDifferential SeriesDifferential::padic(unsigned prime) {
    if (!is_prime(prime)) throw EngineError("padic differential: " + std::to_string(prime) + " is not prime");
    return SeriesDifferential{Kind::padic_weighted, prime};
}

SeriesDifferential SeriesDifferential::degenerate(unsigned prime) {
    if (!is_prime(prime)) throw EngineError("degenerate differential: " + std::to_string(prime) + " is not prime");
    return SeriesDifferential{Kind::degenerate_padic, prime};
}

SemiringValue SeriesDifferential::weight(unsigned n, Semiring tag) const {
    if (n == 0) return SemiringValue::zero(tag);
    switch (kind) {
        case Kind::strict_shift:
            return SemiringValue::one(tag);
        case Kind::padic_weighted:
            if (tag != Semiring::pos_rat)
                throw UnsupportedError("p-adic weighted differential needs pos_rat coefficients");
            return SemiringValue::pos_rat(padic_norm(make_rat(static_cast<long>(n)), prime));
        case Kind::degenerate_padic:
            return (n % prime == 0) ? SemiringValue::zero(tag) : SemiringValue::one(tag);
    }
    throw EngineError("unknown differential kind");
}

bool is_prime(unsigned p) {
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

Rat padic_norm(const Rat& q, unsigned p) {
    if (!is_prime(p)) throw EngineError("padic_norm: " + std::to_string(p) + " is not prime");
    if (q == 0) return 0;
    mpz_class prime(p);
    mpz_class num = abs(q.get_num());
    mpz_class den = q.get_den();
    mpz_class tmp;
    long val = static_cast<long>(mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t()));
    val -= static_cast<long>(mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t()));
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(val < 0 ? -val : val));
    Rat r = (val >= 0) ? Rat(1, power) : Rat(power, 1);
    r.canonicalize();
    return r;
}

void TruncSeries::accumulate(unsigned degree, const SemiringValue& value) {
    if (value.tag() != tag_)
        throw TagMismatchError("series coefficient tag mismatch");
    if (trunc_ && degree > *trunc_) return;
    auto it = coeffs_.find(degree);
    SemiringValue next = (it == coeffs_.end()) ? value : add(it->second, value);
    if (next.is_zero())
        coeffs_.erase(degree);
    else
        coeffs_.insert_or_assign(degree, next);
}

SemiringValue TruncSeries::coeff(unsigned degree) const {
    auto it = coeffs_.find(degree);
    return (it == coeffs_.end()) ? SemiringValue::zero(tag_) : it->second;
}

namespace {

std::optional<unsigned> min_trunc(std::optional<unsigned> a, std::optional<unsigned> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

void require_same_tag(const TruncSeries& a, const TruncSeries& b, const char* op) {
    if (a.coeff_tag() != b.coeff_tag())
        throw TagMismatchError(std::string(op) + ": coefficient semirings differ");
}

}  // namespace

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    require_same_tag(a, b, "series_add");
    TruncSeries out(a.coeff_tag(), min_trunc(a.trunc_deg(), b.trunc_deg()));
    for (const auto& [deg, c] : a.coeffs()) out.accumulate(deg, c);
    for (const auto& [deg, c] : b.coeffs()) out.accumulate(deg, c);
    return out;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    require_same_tag(a, b, "series_mul");
    TruncSeries out(a.coeff_tag(), min_trunc(a.trunc_deg(), b.trunc_deg()));
    for (const auto& [da, ca] : a.coeffs())
        for (const auto& [db, cb] : b.coeffs())
            out.accumulate(da + db, mul(ca, cb));
    return out;
}

TruncSeries differentiate(const TruncSeries& a, const SeriesDifferential& d) {
    std::optional<unsigned> trunc = a.trunc_deg();
    if (trunc) {
        if (*trunc == 0)
            throw TruncationError("differentiate: no known coefficients past degree 0");
        trunc = *trunc - 1;
    }
    TruncSeries out(a.coeff_tag(), trunc);
    for (const auto& [deg, c] : a.coeffs()) {
        if (deg == 0) continue;
        out.accumulate(deg - 1, mul(d.weight(deg, a.coeff_tag()), c));
    }
    return out;
}

TruncSeries differentiate(const TruncSeries& a, const SeriesDifferential& d, unsigned times) {
    TruncSeries out = a;
    for (unsigned i = 0; i < times; ++i) out = differentiate(out, d);
    return out;
}

bool series_equal_to_common_trunc(const TruncSeries& a, const TruncSeries& b) {
    if (a.coeff_tag() != b.coeff_tag()) return false;
    std::optional<unsigned> common = min_trunc(a.trunc_deg(), b.trunc_deg());
    auto within = [&](unsigned deg) { return !common || deg <= *common; };
    for (const auto& [deg, c] : a.coeffs())
        if (within(deg) && !(b.coeff(deg) == c)) return false;
    for (const auto& [deg, c] : b.coeffs())
        if (within(deg) && !(a.coeff(deg) == c)) return false;
    return true;
}

bool series_bend_holds(const std::vector<TruncSeries>& terms) {
    if (terms.empty()) throw EngineError("series_bend_holds: empty term list");
    TruncSeries total = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) total = series_add(total, terms[i]);
    for (std::size_t j = 0; j < terms.size(); ++j) {
        // Seeding with the full sum's truncation clips the subsum to the
        // degrees where the comparison is meaningful.
        TruncSeries rest(terms.front().coeff_tag(), total.trunc_deg());
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (i != j) rest = series_add(rest, terms[i]);
        if (!(rest == total)) return false;
    }
    return true;
}

PairDescriptor boolean_pair() {
    return PairDescriptor{Semiring::boolean, SeriesDifferential::strict_shift(),
                          Semiring::trop_exp, PairDescriptor::Projection::boolean_leading_exponent};
}

PairDescriptor rank2_pair(unsigned prime) {
    return PairDescriptor{Semiring::pos_rat, SeriesDifferential::padic(prime),
                          Semiring::rank2, PairDescriptor::Projection::rank2_leading_term};
}

Projected project(const TruncSeries& a, const PairDescriptor& pair) {
    if (a.coeff_tag() != pair.coeff_tag)
        throw TagMismatchError("project: series does not live in the pair's S1");
    if (a.empty())
        return Projected{SemiringValue::zero(pair.s0_tag), !a.is_exact()};
    const auto& [deg, lead] = *a.coeffs().begin();
    switch (pair.projection) {
        case PairDescriptor::Projection::boolean_leading_exponent:
            return Projected{SemiringValue::trop_exp(make_rat(static_cast<long>(deg))), false};
        case PairDescriptor::Projection::rank2_leading_term:
            return Projected{SemiringValue::rank2(make_rat(static_cast<long>(deg)),
                                                  lead.as_pos_rat().value),
                             false};
    }
    throw EngineError("unknown projection kind");
}

std::optional<unsigned> separating_derivative_order(const TruncSeries& a,
                                                    const TruncSeries& b,
                                                    const PairDescriptor& pair) {
    TruncSeries da = a;
    TruncSeries db = b;
    for (unsigned n = 0;; ++n) {
        Projected pa = project(da, pair);
        Projected pb = project(db, pair);
        if (!pa.caveat && !pb.caveat) {
            if (!(pa.value == pb.value)) return n;
        } else if (!pa.caveat || !pb.caveat) {
            // One side has an exact nonzero leading term; the other is empty
            // within truncation, so its true leading order (if any) lies
            // strictly deeper.  The projections differ no matter what fills
            // the unknown tail.
            return n;
        } else {
            return std::nullopt;  // both unknown; derivatives stay unknown
        }
        // Two exactly known empty series stay empty under d forever.
        if (da.empty() && db.empty()) return std::nullopt;
        bool can_a = !da.trunc_deg() || *da.trunc_deg() >= 1;
        bool can_b = !db.trunc_deg() || *db.trunc_deg() >= 1;
        if (!can_a || !can_b) return std::nullopt;
        da = differentiate(da, pair.differential);
        db = differentiate(db, pair.differential);
    }
}

namespace {

std::string term_to_string(unsigned deg, const SemiringValue& c) {
    std::string coeff;
    if (!c.is_one() || deg == 0) {
        coeff = to_string(c);
        bool needs_parens = coeff.find('/') != std::string::npos ||
                            coeff.find('(') != std::string::npos ||
                            coeff.find('^') != std::string::npos;
        if (needs_parens && deg != 0) coeff = "(" + coeff + ")";
    }
    if (deg == 0) return coeff;
    std::string t = (deg == 1) ? "t" : "t^" + std::to_string(deg);
    return coeff.empty() ? t : coeff + t;
}

}  // namespace

std::string to_string(const TruncSeries& s) {
    std::string out;
    if (s.coeff_tag() == Semiring::boolean) {
        out = "{";
        bool first = true;
        for (const auto& [deg, c] : s.coeffs()) {
            (void)c;
            if (!first) out += ", ";
            out += std::to_string(deg);
            first = false;
        }
        out += "}";
    } else if (s.empty()) {
        out = "0";
    } else {
        bool first = true;
        for (const auto& [deg, c] : s.coeffs()) {
            if (!first) out += " + ";
            out += term_to_string(deg, c);
            first = false;
        }
    }
    if (s.trunc_deg()) out += " + O(t^" + std::to_string(*s.trunc_deg() + 1) + ")";
    return out;
}

TruncSeries constant_series(const SemiringValue& c) {
    TruncSeries out(c.tag(), std::nullopt);
    out.accumulate(0, c);
    return out;
}

}  // namespace tropdiff
