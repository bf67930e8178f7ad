#include "tropdiff/parse.hpp"

#include <algorithm>
#include <cctype>

namespace tropdiff {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "' " + what);
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    void expect_end() {
        if (!eof()) fail("trailing input");
    }
};

unsigned parse_nat(Cursor& cur) {
    cur.skip_ws();
    if (cur.pos >= cur.text.size() || !std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        cur.fail("expected a number");
    unsigned long v = 0;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        v = v * 10 + static_cast<unsigned long>(cur.text[cur.pos] - '0');
        if (v > 1000000) cur.fail("number out of range");
        ++cur.pos;
    }
    return static_cast<unsigned>(v);
}

Rat parse_rational(Cursor& cur, bool allow_sign) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    if (allow_sign && (cur.peek() == '-' || cur.peek() == '+')) ++cur.pos;
    cur.skip_ws();
    std::size_t digits = cur.pos;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
    if (cur.pos == digits) cur.fail("expected a rational number");
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
        ++cur.pos;
        std::size_t den = cur.pos;
        while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
            ++cur.pos;
        if (cur.pos == den) cur.fail("expected a denominator");
    }
    std::string body = cur.text.substr(start, cur.pos - start);
    body.erase(std::remove_if(body.begin(), body.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               body.end());
    try {
        return rat_from_string(body);
    } catch (const std::invalid_argument& e) {
        cur.fail(e.what());
    }
}

// "e^-4", "e^1/2"; also bare "1" and "0".
SemiringValue parse_trop_exp(Cursor& cur) {
    if (cur.peek() == 'e') {
        ++cur.pos;
        cur.expect('^', "after 'e'");
        Rat exponent = parse_rational(cur, true);
        return SemiringValue::trop_exp(Rat(-exponent));
    }
    if (cur.try_consume('0')) return SemiringValue::trop_exp_zero();
    if (cur.try_consume('1')) return SemiringValue::trop_exp(0);
    cur.fail("expected a tropical literal ('e^r', '1', or '0')");
}

SemiringValue parse_value_at(Cursor& cur, Semiring tag) {
    switch (tag) {
        case Semiring::boolean:
            if (cur.try_consume('0')) return SemiringValue::boolean(false);
            if (cur.try_consume('1')) return SemiringValue::boolean(true);
            cur.fail("expected a boolean literal ('0' or '1')");
        case Semiring::trop_exp:
            return parse_trop_exp(cur);
        case Semiring::pos_rat: {
            Rat q = parse_rational(cur, false);
            return SemiringValue::pos_rat(q);
        }
        case Semiring::rank2: {
            if (cur.peek() == '0') {
                ++cur.pos;
                return SemiringValue::rank2_zero();
            }
            cur.expect('(', "to open a rank-2 literal");
            SemiringValue first = parse_trop_exp(cur);
            cur.expect(',', "between rank-2 components");
            Rat second = parse_rational(cur, false);
            cur.expect(')', "to close a rank-2 literal");
            if (first.is_zero() || second == 0) return SemiringValue::rank2_zero();
            return SemiringValue::rank2(*first.as_trop_exp().order, second);
        }
    }
    cur.fail("unknown semiring");
}

// O(t^k) pins trunc_deg to k-1; bare O(t) means k = 1.
unsigned parse_big_o(Cursor& cur) {
    cur.expect('O', "");
    cur.expect('(', "after O");
    cur.expect('t', "inside O(...)");
    unsigned k = 1;
    if (cur.try_consume('^')) k = parse_nat(cur);
    cur.expect(')', "to close O(...)");
    if (k == 0) cur.fail("O(t^0) is not a truncation");
    return k - 1;
}

// 't', 't^5'; returns the degree.
unsigned parse_t_power(Cursor& cur) {
    cur.expect('t', "");
    if (cur.try_consume('^')) return parse_nat(cur);
    return 1;
}

bool starts_t_part(Cursor& cur) { return cur.peek() == 't'; }

TruncSeries parse_series_at(Cursor& cur, Semiring tag, std::optional<unsigned> default_trunc) {
    std::vector<std::pair<unsigned, SemiringValue>> entries;
    std::optional<unsigned> explicit_trunc;

    if (tag == Semiring::boolean && cur.peek() == '{') {
        ++cur.pos;
        if (!cur.try_consume('}')) {
            while (true) {
                entries.emplace_back(parse_nat(cur), SemiringValue::boolean(true));
                if (cur.try_consume('}')) break;
                cur.expect(',', "between support elements");
            }
        }
        if (cur.try_consume('+')) explicit_trunc = parse_big_o(cur);
    } else {
        do {
            if (cur.peek() == 'O') {
                if (explicit_trunc) cur.fail("repeated O(...) marker");
                explicit_trunc = parse_big_o(cur);
                continue;
            }
            SemiringValue coeff = SemiringValue::one(tag);
            bool have_coeff = false;
            if (!starts_t_part(cur)) {
                if (cur.peek() == '(' && tag != Semiring::rank2) {
                    ++cur.pos;
                    coeff = parse_value_at(cur, tag);
                    cur.expect(')', "to close the coefficient");
                } else {
                    coeff = parse_value_at(cur, tag);
                }
                have_coeff = true;
            }
            unsigned degree = 0;
            if (starts_t_part(cur))
                degree = parse_t_power(cur);
            else if (!have_coeff)
                cur.fail("expected a series term");
            entries.emplace_back(degree, coeff);
        } while (cur.try_consume('+'));
    }

    TruncSeries out(tag, explicit_trunc ? explicit_trunc : default_trunc);
    for (const auto& [deg, c] : entries) out.accumulate(deg, c);
    return out;
}

RatSeries parse_rat_series_at(Cursor& cur, std::optional<unsigned> default_trunc) {
    std::vector<std::pair<unsigned, Rat>> entries;
    std::optional<unsigned> explicit_trunc;
    bool negative = cur.try_consume('-');
    while (true) {
        if (cur.peek() == 'O') {
            if (explicit_trunc) cur.fail("repeated O(...) marker");
            explicit_trunc = parse_big_o(cur);
        } else {
            Rat coeff = 1;
            bool have_coeff = false;
            if (!starts_t_part(cur)) {
                if (cur.peek() == '(') {
                    ++cur.pos;
                    coeff = parse_rational(cur, true);
                    cur.expect(')', "to close the coefficient");
                } else {
                    coeff = parse_rational(cur, false);
                }
                have_coeff = true;
            }
            unsigned degree = 0;
            if (starts_t_part(cur))
                degree = parse_t_power(cur);
            else if (!have_coeff)
                cur.fail("expected a series term");
            if (negative) coeff = -coeff;
            entries.emplace_back(degree, coeff);
        }
        if (cur.try_consume('+'))
            negative = false;
        else if (cur.try_consume('-'))
            negative = true;
        else
            break;
    }
    RatSeries out(explicit_trunc ? explicit_trunc : default_trunc);
    for (const auto& [deg, c] : entries) out.accumulate(deg, c);
    return out;
}

// x3, x1', x1'', x2^(4); optional trailing ^k multiplicity.
struct VarFactor {
    unsigned index;
    unsigned order;
    unsigned mult;
};

VarFactor parse_var_factor(Cursor& cur) {
    cur.expect('x', "");
    unsigned surface = parse_nat(cur);
    if (surface == 0) cur.fail("variables are numbered from x1");
    unsigned order = 0;
    if (cur.peek() == '\'') {
        while (cur.try_consume('\'')) ++order;
    } else if (cur.peek() == '^') {
        std::size_t save = cur.pos;
        ++cur.pos;
        if (cur.peek() == '(') {
            ++cur.pos;
            order = parse_nat(cur);
            cur.expect(')', "to close the derivative order");
        } else {
            cur.pos = save;  // it's a plain power, handled below
        }
    }
    unsigned mult = 1;
    if (cur.peek() == '^') {
        std::size_t save = cur.pos;
        ++cur.pos;
        if (cur.peek() == '(') {
            cur.pos = save;
            cur.fail("unexpected second derivative marker");
        }
        mult = parse_nat(cur);
        if (mult == 0) cur.fail("zero powers are not written explicitly");
    }
    return VarFactor{surface - 1, order, mult};
}

bool starts_var(Cursor& cur) { return cur.peek() == 'x'; }

DiffPoly parse_diff_poly_at(Cursor& cur, Semiring tag) {
    DiffPoly out(tag);
    if (cur.peek() == '0') {
        std::size_t save = cur.pos;
        ++cur.pos;
        if (cur.eof()) return out;
        cur.pos = save;
    }
    do {
        DiffMonomial mono;
        SemiringValue coeff = SemiringValue::one(tag);
        while (true) {
            if (starts_var(cur)) {
                VarFactor v = parse_var_factor(cur);
                mono.multiply_in(v.index, v.order, v.mult);
            } else {
                coeff = mul(coeff, parse_value_at(cur, tag));
            }
            if (!cur.try_consume('*')) break;
        }
        out.add_term(mono, coeff);
    } while (cur.try_consume('+'));
    return out;
}

RatDiffPoly parse_rat_diff_poly_at(Cursor& cur) {
    RatDiffPoly out;
    if (cur.peek() == '0') {
        std::size_t save = cur.pos;
        ++cur.pos;
        if (cur.eof()) return out;
        cur.pos = save;
    }
    bool negative = cur.try_consume('-');
    while (true) {
        DiffMonomial mono;
        RatSeries coeff = RatSeries::constant(1);
        while (true) {
            if (starts_var(cur)) {
                VarFactor v = parse_var_factor(cur);
                mono.multiply_in(v.index, v.order, v.mult);
            } else if (cur.peek() == '(') {
                ++cur.pos;
                RatSeries inner = parse_rat_series_at(cur, std::nullopt);
                cur.expect(')', "to close the coefficient");
                coeff = rat_mul(coeff, inner);
            } else {
                coeff = rat_mul(coeff, RatSeries::constant(parse_rational(cur, false)));
            }
            if (!cur.try_consume('*')) break;
        }
        if (negative) coeff = rat_sub(RatSeries(), coeff);
        out.add_term(mono, coeff);
        if (cur.try_consume('+'))
            negative = false;
        else if (cur.try_consume('-'))
            negative = true;
        else
            break;
    }
    return out;
}

ForestExpr parse_forest_at(Cursor& cur, Semiring tag);

ForestExpr parse_forest_factor(Cursor& cur, Semiring tag) {
    if (cur.peek() == 'd') {
        std::size_t save = cur.pos;
        ++cur.pos;
        if (cur.peek() == '(') {
            ++cur.pos;
            ForestExpr inner = parse_forest_at(cur, tag);
            cur.expect(')', "to close d(...)");
            return forest_d(inner);
        }
        cur.pos = save;
        cur.fail("expected '(' after d");
    }
    if (starts_var(cur)) {
        VarFactor v = parse_var_factor(cur);
        ForestExpr base = forest_d(var_leaf(v.index), v.order);
        ForestExpr acc = base;
        for (unsigned i = 1; i < v.mult; ++i) acc = forest_mul(acc, base);
        return acc;
    }
    if (cur.peek() == '(' && tag == Semiring::rank2) {
        return coeff_leaf(parse_value_at(cur, tag));
    }
    if (cur.peek() == '(') {
        ++cur.pos;
        ForestExpr inner = parse_forest_at(cur, tag);
        cur.expect(')', "to close the group");
        return inner;
    }
    return coeff_leaf(parse_value_at(cur, tag));
}

ForestExpr parse_forest_at(Cursor& cur, Semiring tag) {
    ForestExpr sum = forest_zero();
    do {
        ForestExpr term = parse_forest_factor(cur, tag);
        while (cur.try_consume('*')) term = forest_mul(term, parse_forest_factor(cur, tag));
        sum = forest_sum(sum, term);
    } while (cur.try_consume('+'));
    return sum;
}

}  // namespace

SemiringValue parse_value(const std::string& text, Semiring tag) {
    Cursor cur{text};
    SemiringValue v = parse_value_at(cur, tag);
    cur.expect_end();
    return v;
}

TruncSeries parse_series(const std::string& text, Semiring tag,
                         std::optional<unsigned> default_trunc) {
    Cursor cur{text};
    TruncSeries s = parse_series_at(cur, tag, default_trunc);
    cur.expect_end();
    return s;
}

RatSeries parse_rat_series(const std::string& text, std::optional<unsigned> default_trunc) {
    Cursor cur{text};
    RatSeries s = parse_rat_series_at(cur, default_trunc);
    cur.expect_end();
    return s;
}

DiffPoly parse_diff_poly(const std::string& text, Semiring coeff_tag) {
    Cursor cur{text};
    DiffPoly f = parse_diff_poly_at(cur, coeff_tag);
    cur.expect_end();
    return f;
}

RatDiffPoly parse_rat_diff_poly(const std::string& text) {
    Cursor cur{text};
    RatDiffPoly f = parse_rat_diff_poly_at(cur);
    cur.expect_end();
    return f;
}

ForestExpr parse_forest(const std::string& text, Semiring coeff_tag) {
    Cursor cur{text};
    if (cur.peek() == '0') {
        std::size_t save = cur.pos;
        ++cur.pos;
        if (cur.eof()) return forest_zero();
        cur.pos = save;
    }
    ForestExpr f = parse_forest_at(cur, coeff_tag);
    cur.expect_end();
    return f;
}

}  // namespace tropdiff
