#include "tropdiff/seminorm.hpp"

#include <algorithm>

namespace tropdiff {

void RatSeries::accumulate(unsigned degree, const Rat& value) {
    if (trunc_ && degree > *trunc_) return;
    auto it = coeffs_.find(degree);
    Rat next = (it == coeffs_.end()) ? value : Rat(it->second + value);
    if (next == 0)
        coeffs_.erase(degree);
    else
        coeffs_.insert_or_assign(degree, next);
}

Rat RatSeries::coeff(unsigned degree) const {
    auto it = coeffs_.find(degree);
    return (it == coeffs_.end()) ? Rat(0) : it->second;
}

RatSeries RatSeries::constant(const Rat& c) {
    RatSeries s;
    s.accumulate(0, c);
    return s;
}

namespace {

std::optional<unsigned> min_trunc(std::optional<unsigned> a, std::optional<unsigned> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace

RatSeries rat_add(const RatSeries& a, const RatSeries& b) {
    RatSeries out(min_trunc(a.trunc_deg(), b.trunc_deg()));
    for (const auto& [deg, c] : a.coeffs()) out.accumulate(deg, c);
    for (const auto& [deg, c] : b.coeffs()) out.accumulate(deg, c);
    return out;
}

RatSeries rat_sub(const RatSeries& a, const RatSeries& b) {
    RatSeries out(min_trunc(a.trunc_deg(), b.trunc_deg()));
    for (const auto& [deg, c] : a.coeffs()) out.accumulate(deg, c);
    for (const auto& [deg, c] : b.coeffs()) out.accumulate(deg, Rat(-c));
    return out;
}

RatSeries rat_mul(const RatSeries& a, const RatSeries& b) {
    RatSeries out(min_trunc(a.trunc_deg(), b.trunc_deg()));
    for (const auto& [da, ca] : a.coeffs())
        for (const auto& [db, cb] : b.coeffs())
            out.accumulate(da + db, Rat(ca * cb));
    return out;
}

RatSeries rat_ddt(const RatSeries& a) {
    std::optional<unsigned> trunc = a.trunc_deg();
    if (trunc) {
        if (*trunc == 0) throw TruncationError("d/dt: no known coefficients past degree 0");
        trunc = *trunc - 1;
    }
    RatSeries out(trunc);
    for (const auto& [deg, c] : a.coeffs()) {
        if (deg == 0) continue;
        out.accumulate(deg - 1, Rat(c * static_cast<long>(deg)));
    }
    return out;
}

RatSeries rat_ddt(const RatSeries& a, unsigned times) {
    RatSeries out = a;
    for (unsigned i = 0; i < times; ++i) out = rat_ddt(out);
    return out;
}

bool rat_equal_to_common_trunc(const RatSeries& a, const RatSeries& b) {
    std::optional<unsigned> common = min_trunc(a.trunc_deg(), b.trunc_deg());
    auto within = [&](unsigned deg) { return !common || deg <= *common; };
    for (const auto& [deg, c] : a.coeffs())
        if (within(deg) && b.coeff(deg) != c) return false;
    for (const auto& [deg, c] : b.coeffs())
        if (within(deg) && a.coeff(deg) != c) return false;
    return true;
}

std::string to_string(const RatSeries& s) {
    std::string out;
    if (s.empty()) {
        out = "0";
    } else {
        bool first = true;
        for (const auto& [deg, c] : s.coeffs()) {
            Rat mag = abs(c);
            if (first) {
                out += (c < 0) ? "-" : "";
            } else {
                out += (c < 0) ? " - " : " + ";
            }
            std::string coeff;
            if (mag != 1 || deg == 0) {
                coeff = rat_to_string(mag);
                if (mag.get_den() != 1 && deg != 0) coeff = "(" + coeff + ")";
            }
            if (deg == 0) {
                out += coeff;
            } else {
                std::string t = (deg == 1) ? "t" : "t^" + std::to_string(deg);
                out += coeff.empty() ? t : coeff + t;
            }
            first = false;
        }
    }
    if (s.trunc_deg()) out += " + O(t^" + std::to_string(*s.trunc_deg() + 1) + ")";
    return out;
}

void RatDiffPoly::add_term(const DiffMonomial& m, const RatSeries& coeff) {
    auto it = terms_.find(m);
    RatSeries next = (it == terms_.end()) ? coeff : rat_add(it->second, coeff);
    if (next.empty() && next.is_exact())
        terms_.erase(m);
    else
        terms_.insert_or_assign(m, next);
}

std::string to_string(const RatDiffPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : f.terms()) {
        bool constant = coeff.is_exact() && coeff.coeffs().size() == 1 &&
                        coeff.coeffs().begin()->first == 0;
        std::string body;
        bool negative = false;
        if (constant) {
            Rat c = coeff.coeffs().begin()->second;
            negative = c < 0;
            Rat mag = abs(c);
            if (mono.is_one())
                body = rat_to_string(mag);
            else if (mag == 1)
                body = to_string(mono);
            else
                body = rat_to_string(mag) + "*" + to_string(mono);
        } else {
            body = "(" + to_string(coeff) + ")";
            if (!mono.is_one()) body += "*" + to_string(mono);
        }
        if (out.empty())
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

EnhancedSeminorm EnhancedSeminorm::grigoriev() {
    return EnhancedSeminorm{Kind::grigoriev, 0, boolean_pair()};
}

EnhancedSeminorm EnhancedSeminorm::padic_rank2(unsigned prime) {
    return EnhancedSeminorm{Kind::padic_rank2, prime, rank2_pair(prime)};
}

TruncSeries enhance(const RatSeries& a, const EnhancedSeminorm& e) {
    TruncSeries out(e.pair.coeff_tag, a.trunc_deg());
    for (const auto& [deg, c] : a.coeffs()) {
        switch (e.kind) {
            case EnhancedSeminorm::Kind::grigoriev:
                out.accumulate(deg, SemiringValue::boolean(true));
                break;
            case EnhancedSeminorm::Kind::padic_rank2:
                out.accumulate(deg, SemiringValue::pos_rat(padic_norm(c, e.prime)));
                break;
        }
    }
    return out;
}

Projected value(const RatSeries& a, const EnhancedSeminorm& e) {
    return project(enhance(a, e), e.pair);
}

void CheckReport::record(bool ok, const std::string& detail) {
    ++cases;
    if (!ok) {
        ++failures;
        if (first_counterexample.empty()) first_counterexample = detail;
    }
}

CheckReport check_seminorm_axioms(const EnhancedSeminorm& e, const std::vector<RatSeries>& samples) {
    CheckReport report;
    report.name = "seminorm-axioms";
    report.record(value(RatSeries(), e).value.is_zero(), "v(0) != 0");
    report.record(value(RatSeries::constant(1), e).value.is_one(), "v(1) != 1");
    report.record(value(RatSeries::constant(-1), e).value.is_one(), "v(-1) != 1");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const RatSeries& a = samples[i];
        const RatSeries& b = samples[(i + 1) % samples.size()];
        Projected va = value(a, e);
        Projected vb = value(b, e);
        Projected vab = value(rat_mul(a, b), e);
        Projected vsum = value(rat_add(a, b), e);
        if (va.caveat || vb.caveat || vab.caveat) {
            report.skip();
        } else {
            report.record(vab.value == mul(va.value, vb.value),
                          "v(ab) != v(a)v(b) at a=" + to_string(a) + " b=" + to_string(b));
        }
        if (va.caveat || vb.caveat || vsum.caveat) {
            report.skip();
        } else {
            SemiringValue rhs = add(va.value, vb.value);
            report.record(add(vsum.value, rhs) == rhs,
                          "ultrametric identity fails at a=" + to_string(a) + " b=" + to_string(b));
        }
    }
    return report;
}

CheckReport check_padic_axioms(unsigned prime, const std::vector<Rat>& samples) {
    CheckReport report;
    report.name = "padic-axioms";
    report.record(padic_norm(0, prime) == 0, "|0| != 0");
    report.record(padic_norm(1, prime) == 1, "|1| != 1");
    report.record(padic_norm(-1, prime) == 1, "|-1| != 1");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Rat& a = samples[i];
        const Rat& b = samples[(i + 1) % samples.size()];
        report.record(padic_norm(Rat(a * b), prime) == padic_norm(a, prime) * padic_norm(b, prime),
                      "|ab| != |a||b| at a=" + rat_to_string(a) + " b=" + rat_to_string(b));
        Rat bound = std::max(padic_norm(a, prime), padic_norm(b, prime));
        report.record(padic_norm(Rat(a + b), prime) <= bound,
                      "ultrametric inequality fails at a=" + rat_to_string(a) +
                          " b=" + rat_to_string(b));
    }
    return report;
}

CheckReport check_weight_seminorm(const SeriesDifferential& d, Semiring tag, unsigned max_n) {
    CheckReport report;
    report.name = "weight-seminorm";
    report.record(d.weight(0, tag).is_zero(), "v(0) != 0");
    report.record(d.weight(1, tag).is_one(), "v(1) != 1");
    for (unsigned n = 0; n <= max_n; ++n) {
        for (unsigned m = 0; m <= max_n; ++m) {
            SemiringValue vn = d.weight(n, tag);
            SemiringValue vm = d.weight(m, tag);
            report.record(d.weight(n * m, tag) == mul(vn, vm),
                          "v(nm) != v(n)v(m) at n=" + std::to_string(n) + " m=" + std::to_string(m));
            SemiringValue bound = add(vn, vm);
            report.record(leq(d.weight(n + m, tag), bound),
                          "v(n+m) > v(n)+v(m) at n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
    }
    return report;
}

CheckReport check_enhancement_commutes(const EnhancedSeminorm& e, const std::vector<RatSeries>& samples) {
    CheckReport report;
    report.name = "enhancement-commutes";
    for (const RatSeries& a : samples) {
        if (a.trunc_deg() && *a.trunc_deg() == 0) {
            report.skip();
            continue;
        }
        TruncSeries lhs = enhance(rat_ddt(a), e);
        TruncSeries rhs = differentiate(enhance(a, e), e.pair.differential);
        report.record(series_equal_to_common_trunc(lhs, rhs),
                      "enhance(d/dt a) != d(enhance(a)) at a=" + to_string(a));
    }
    return report;
}

TropEquation trop_equation(const RatDiffPoly& f, const EnhancedSeminorm& e) {
    TropEquation out{DiffPoly(e.pair.s0_tag), false};
    for (const auto& [mono, coeff] : f.terms()) {
        Projected v = value(coeff, e);
        if (v.caveat) {
            out.caveat = true;
            continue;
        }
        out.poly.add_term(mono, v.value);
    }
    return out;
}

std::vector<TruncSeries> trop_point(const std::vector<RatSeries>& p, const EnhancedSeminorm& e) {
    std::vector<TruncSeries> out;
    out.reserve(p.size());
    for (const RatSeries& a : p) out.push_back(enhance(a, e));
    return out;
}

RatSeries solve_linear_ode(const std::vector<RatSeries>& coeffs, const std::vector<Rat>& init,
                           unsigned deg) {
    if (coeffs.empty()) throw UnsupportedError("solve_linear_ode: no coefficients");
    const unsigned m = static_cast<unsigned>(coeffs.size()) - 1;
    if (init.size() != m)
        throw UnsupportedError("solve_linear_ode: expected " + std::to_string(m) +
                               " initial coefficients, got " + std::to_string(init.size()));
    const RatSeries& lead = coeffs[m];
    if (lead.coeff(0) == 0)
        throw UnsupportedError("solve_linear_ode: leading coefficient has zero constant term");
    if (deg >= m) {
        for (const RatSeries& c : coeffs)
            if (c.trunc_deg() && *c.trunc_deg() < deg - m)
                throw TruncationError("solve_linear_ode: coefficient known only to degree " +
                                      std::to_string(*c.trunc_deg()));
    }

    // Falling factorial p!/q! as an exact integer.
    auto falling = [](unsigned p, unsigned q) {
        mpz_class acc = 1;
        for (unsigned v = q + 1; v <= p; ++v) acc *= v;
        return Rat(acc);
    };

    RatSeries x(deg);
    for (unsigned i = 0; i < m && i <= deg; ++i) x.accumulate(i, init[i]);
    for (unsigned n = 0; m + n <= deg; ++n) {
        // Coefficient of t^n in sum_i c_i x^(i), leaving out the one
        // occurrence of the unknown a_{n+m}.
        Rat known = 0;
        for (unsigned i = 0; i <= m; ++i) {
            for (const auto& [j, cij] : coeffs[i].coeffs()) {
                if (j > n) break;
                unsigned k = n - j;
                if (i == m && k == n) continue;
                known += cij * x.coeff(k + i) * falling(k + i, k);
            }
        }
        Rat denom = lead.coeff(0) * falling(n + m, n);
        x.accumulate(n + m, Rat(-known / denom));
    }
    return x;
}

}  // namespace tropdiff
