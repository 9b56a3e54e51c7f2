#include "polyexp/poly_exponential.hpp"

#include <algorithm>
#include <cmath>

namespace polyexp {

ParamPoint ParamPoint::ell(std::vector<Rational> values) {
    std::vector<std::string> names;
    names.reserve(values.size());
    for (size_t i = 0; i < values.size(); ++i) names.push_back("l" + std::to_string(i + 1));
    return ParamPoint(std::move(names), std::move(values));
}

ParamPoint ParamPoint::ell(std::vector<double> values) {
    std::vector<std::string> names;
    names.reserve(values.size());
    for (size_t i = 0; i < values.size(); ++i) names.push_back("l" + std::to_string(i + 1));
    return ParamPoint(std::move(names), std::move(values));
}

double ParamPoint::value_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return vals_[i];
    throw OutOfRange("unknown parameter '" + name + "'");
}

Rational ParamPoint::exact_value_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return (*exact_)[i];
    throw OutOfRange("unknown parameter '" + name + "'");
}

ParamPoint ParamPoint::scaled(const Rational& r) const {
    if (exact_) {
        std::vector<Rational> v = *exact_;
        for (auto& x : v) x *= r;
        return ParamPoint(names_, std::move(v));
    }
    std::vector<double> v = vals_;
    double rd = to_double(r);
    for (auto& x : v) x *= rd;
    return ParamPoint(names_, std::move(v));
}

ConcretePolyExp::ConcretePolyExp(std::vector<ConcreteTerm> terms) {
    for (const auto& t : terms) {
        double e = t.exp_exact ? to_double(*t.exp_exact) : t.exponent;
        if (e < 0) throw NegativeExponent("instantiated exponent " + std::to_string(e) + " < 0");
    }
    bool exact = std::all_of(terms.begin(), terms.end(),
                             [](const ConcreteTerm& t) { return t.exp_exact.has_value(); });
    auto less = [&](const ConcreteTerm& a, const ConcreteTerm& b) {
        if (exact) return *a.exp_exact < *b.exp_exact;
        return a.exponent < b.exponent;
    };
    auto same = [&](const ConcreteTerm& a, const ConcreteTerm& b) {
        if (exact) return *a.exp_exact == *b.exp_exact;
        return a.exponent == b.exponent;
    };
    std::stable_sort(terms.begin(), terms.end(), less);

    // Track whether the largest exponent was shared by distinct terms before
    // merging; in_cone-style checks need it even when the merge survives.
    if (terms.size() >= 2 && same(terms[terms.size() - 2], terms.back())) unique_max_ = false;

    for (auto& t : terms) {
        if (t.coeff_exact == 0 && t.coeff != 0) t.coeff_exact = rational_from_double(t.coeff);
        t.coeff = to_double(t.coeff_exact);
        if (t.exp_exact) t.exponent = to_double(*t.exp_exact);
        if (!terms_.empty() && same(terms_.back(), t)) {
            terms_.back().coeff_exact += t.coeff_exact;
            terms_.back().coeff = to_double(terms_.back().coeff_exact);
            if (terms_.back().coeff_exact == 0) terms_.pop_back();
        } else if (t.coeff_exact != 0) {
            terms_.push_back(t);
        }
    }
    bool has_const =
        !terms_.empty() && (exact ? *terms_.front().exp_exact == 0 : terms_.front().exponent == 0);
    if (!has_const) throw ConstantTermVanished("constant term absent or cancelled by merging");
}

Complex ConcretePolyExp::eval(Complex w, int k) const {
    Complex acc = 0;
    for (const auto& t : terms_) {
        if (t.exponent == 0.0) {
            if (k == 0) acc += t.coeff;
            continue;
        }
        Complex f = std::exp(t.exponent * w);
        double lk = 1.0;
        for (int i = 0; i < k; ++i) lk *= t.exponent;
        acc += t.coeff * lk * f;
    }
    return acc;
}

PolyExponential::PolyExponential(Rational a0, std::vector<std::string> params,
                                 std::vector<Term> terms)
    : a0_(std::move(a0)), params_(std::move(params)) {
    if (a0_ == 0) throw ConstantTermVanished("a0 must be nonzero");
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        auto it = std::find_if(terms_.begin(), terms_.end(),
                               [&](const Term& u) { return u.exponent == t.exponent; });
        if (it == terms_.end())
            terms_.push_back(std::move(t));
        else {
            it->coeff += t.coeff;
            if (it->coeff == 0) terms_.erase(it);
        }
    }
}

ConcretePolyExp PolyExponential::instantiate(const ParamPoint& pt) const {
    std::vector<ConcreteTerm> out;
    ConcreteTerm c;
    c.coeff_exact = a0_;
    c.coeff = to_double(a0_);
    c.exp_exact = Rational(0);
    out.push_back(c);
    for (const auto& t : terms_) {
        ConcreteTerm ct;
        ct.coeff_exact = t.coeff;
        ct.coeff = to_double(t.coeff);
        if (pt.is_exact()) {
            ct.exp_exact = t.exponent.evaluate(
                [&](const std::string& n) -> Rational { return pt.exact_value_of(n); });
            ct.exponent = to_double(*ct.exp_exact);
        } else {
            ct.exponent =
                t.exponent.evaluate([&](const std::string& n) -> double { return pt.value_of(n); });
        }
        out.push_back(ct);
    }
    return ConcretePolyExp(std::move(out));
}

PolyExponential::JetDir PolyExponential::eval_dir(const ParamPoint& pt,
                                                  const std::vector<double>& dir,
                                                  Complex w) const {
    JetDir j{to_double(a0_), 0.0, 0.0, std::abs(to_double(a0_))};
    for (const auto& t : terms_) {
        double L =
            t.exponent.evaluate([&](const std::string& n) -> double { return pt.value_of(n); });
        double dL = 0;
        for (const auto& [name, coef] : t.exponent.coeffs()) {
            for (size_t i = 0; i < pt.names().size(); ++i)
                if (pt.names()[i] == name) dL += to_double(coef) * dir[i];
        }
        Complex f = to_double(t.coeff) * std::exp(L * w);
        j.q += f;
        j.dq_dw += L * f;
        j.dq_ds += dL * w * f;
        j.scale += std::abs(f);
    }
    return j;
}

bool in_cone(const ParamPoint& ell) {
    size_t m = ell.size();
    if (m == 0) return false;
    for (size_t i = 0; i < m; ++i)
        if (!(ell.value(i) > 0)) return false;
    for (size_t i = 0; i + 1 < m; ++i)
        if (!(ell.value(i) < ell.value(m - 1))) return false;
    return true;
}

IotaImage iota(const ParamPoint& ell) {
    if (!in_cone(ell))
        throw NotInCone("iota requires ℓ in S (positive entries, strict unique maximum last)");
    size_t m = ell.size();
    IotaImage out;
    if (ell.is_exact()) {
        std::vector<Rational> l = ell.exact_values();
        Rational lm = l[m - 1];
        std::vector<Rational> lbar;
        lbar.push_back(lm);
        for (size_t i = 0; i + 1 < m; ++i) lbar.push_back(lm - l[i]);
        Rational min_l = *std::min_element(l.begin(), l.end());
        Rational min_lbar = *std::min_element(lbar.begin(), lbar.end());
        for (const auto& x : l) out.p.push_back(to_double(x / min_l));
        for (const auto& x : lbar) out.q.push_back(to_double(x / min_lbar));
        return out;
    }
    const std::vector<double>& l = ell.values();
    double lm = l[m - 1];
    std::vector<double> lbar;
    lbar.push_back(lm);
    for (size_t i = 0; i + 1 < m; ++i) lbar.push_back(lm - l[i]);
    double min_l = *std::min_element(l.begin(), l.end());
    double min_lbar = *std::min_element(lbar.begin(), lbar.end());
    for (double x : l) out.p.push_back(x / min_l);
    for (double x : lbar) out.q.push_back(x / min_lbar);
    return out;
}

BarData bar_transform(const ConcretePolyExp& qc) {
    const auto& ts = qc.terms();
    if (ts.size() < 2) throw TiedLeadingExponent("bar transform needs a non-constant term");
    const ConcreteTerm& lead = ts.back();
    double lm = lead.exponent;

    BarData bd;
    bd.lbar.push_back(lm);
    bd.min_l = ts[1].exponent;  // smallest positive exponent (index 0 is the constant)
    std::vector<ConcreteTerm> bar;

    // Q̄ = a₀ e^{ℓ_m w} + Σ_{i<m} aᵢ e^{(ℓ_m−ℓᵢ) w} + a_m  (expanded form)
    ConcreteTerm c0;
    c0.coeff_exact = ts.front().coeff_exact;
    c0.coeff = ts.front().coeff;
    if (lead.exp_exact)
        c0.exp_exact = *lead.exp_exact;
    else
        c0.exponent = lm;
    bar.push_back(c0);
    for (size_t i = 1; i + 1 < ts.size(); ++i) {
        ConcreteTerm t;
        t.coeff_exact = ts[i].coeff_exact;
        t.coeff = ts[i].coeff;
        if (lead.exp_exact && ts[i].exp_exact)
            t.exp_exact = *lead.exp_exact - *ts[i].exp_exact;
        else
            t.exponent = lm - ts[i].exponent;
        bar.push_back(t);
        bd.lbar.push_back(lm - ts[i].exponent);
    }
    ConcreteTerm cm;
    cm.coeff_exact = lead.coeff_exact;
    cm.coeff = lead.coeff;
    cm.exp_exact = Rational(0);
    bar.push_back(cm);

    bd.min_lbar = *std::min_element(bd.lbar.begin(), bd.lbar.end());
    bd.qbar = ConcretePolyExp(std::move(bar));
    return bd;
}

std::vector<double> exponents_of(const ConcretePolyExp& qc) {
    std::vector<double> out;
    for (size_t i = 1; i < qc.terms().size(); ++i) out.push_back(qc.terms()[i].exponent);
    return out;
}

std::string LinearForm::str(const std::string& var) const {
    std::string s;
    auto append = [&](const Rational& c, const std::string& sym) {
        if (c == 0) return;
        std::string mag = rational_str(c < 0 ? Rational(-c) : c);
        if (s.empty())
            s += (c < 0 ? "-" : "");
        else
            s += (c < 0 ? " - " : " + ");
        if (sym.empty())
            s += mag;
        else if (mag == "1")
            s += sym;
        else
            s += mag + "*" + sym;
    };
    for (const auto& [n, c] : coeffs_) append(c, n.empty() ? var : n);
    append(constant_, "");
    return s.empty() ? "0" : s;
}

}  // namespace polyexp
