#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "polyexp/errors.hpp"
#include "polyexp/linear_form.hpp"
#include "polyexp/rational.hpp"

namespace polyexp {

using Complex = std::complex<double>;

// A point in parameter space. Points built from rationals keep the exact values
// alongside the doubles so that instantiation and iota can stay exact.
class ParamPoint {
public:
    ParamPoint() = default;
    ParamPoint(std::vector<std::string> names, std::vector<double> values)
        : names_(std::move(names)), vals_(std::move(values)) {}
    ParamPoint(std::vector<std::string> names, std::vector<Rational> values)
        : names_(std::move(names)), exact_(std::move(values)) {
        vals_.reserve(exact_->size());
        for (const auto& r : *exact_) vals_.push_back(to_double(r));
    }

    // Anonymous exponent vector ℓ = (l1, ..., lm).
    static ParamPoint ell(std::vector<Rational> values);
    static ParamPoint ell(std::vector<double> values);

    size_t size() const { return vals_.size(); }
    bool is_exact() const { return exact_.has_value(); }
    const std::vector<std::string>& names() const { return names_; }
    double value(size_t i) const { return vals_[i]; }
    const std::vector<double>& values() const { return vals_; }
    const Rational& exact_value(size_t i) const { return (*exact_)[i]; }
    const std::vector<Rational>& exact_values() const { return *exact_; }

    double value_of(const std::string& name) const;
    Rational exact_value_of(const std::string& name) const;

    ParamPoint scaled(const Rational& r) const;

private:
    std::vector<std::string> names_;
    std::vector<double> vals_;
    std::optional<std::vector<Rational>> exact_;
};

// One instantiated term a·e^{ℓw}; exponent kept exactly when the point was exact.
struct ConcreteTerm {
    double coeff = 0;
    double exponent = 0;
    Rational coeff_exact;
    std::optional<Rational> exp_exact;
};

// Q_ℓ: terms sorted by strictly increasing exponent; entry 0 is the constant term.
class ConcretePolyExp {
public:
    ConcretePolyExp() = default;
    // Terms need not be sorted or merged; merging and validation happen here.
    explicit ConcretePolyExp(std::vector<ConcreteTerm> terms);

    const std::vector<ConcreteTerm>& terms() const { return terms_; }
    size_t num_nonconstant() const { return terms_.size() - 1; }
    double constant() const { return terms_.front().coeff; }
    const ConcreteTerm& leading() const { return terms_.back(); }

    // Σ aᵢ ℓᵢᵏ e^{ℓᵢw}; the constant term contributes only at k = 0.
    Complex eval(Complex w, int k = 0) const;

    bool has_unique_max() const { return unique_max_; }

private:
    std::vector<ConcreteTerm> terms_;
    bool unique_max_ = true;  // false when the largest exponent was tied before merging
};

struct BarData {
    std::vector<double> lbar;  // (ℓ_m, ℓ_m−ℓ₁, …, ℓ_m−ℓ_{m−1})
    double min_l = 0;          // smallest positive exponent of Q
    double min_lbar = 0;
    ConcretePolyExp qbar;
};

struct IotaImage {
    std::vector<double> p;  // ℓ / min(ℓ)
    std::vector<double> q;  // ℓ̄ / min(ℓ̄)
};

// a₀ + Σ aᵢ e^{Lᵢ(params)·w} with exponents as linear forms; terms with identical
// forms are merged at construction, a₀ must stay nonzero.
class PolyExponential {
public:
    struct Term {
        Rational coeff;
        LinearForm exponent;
    };

    PolyExponential(Rational a0, std::vector<std::string> params, std::vector<Term> terms);

    const Rational& a0() const { return a0_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::vector<Term>& terms() const { return terms_; }

    ConcretePolyExp instantiate(const ParamPoint& pt) const;

    // Value and w-derivative at (pt, w), plus the path derivative
    // dQ/ds = Σ aᵢ Lᵢ(dir) w e^{Lᵢ(pt)w} for a parameter direction dir
    // (dir uses the linear part of each form only). Used by continuation.
    struct JetDir {
        Complex q, dq_dw, dq_ds;
        double scale = 0;  // Σ|aᵢ e^{Lᵢw}| + |a₀|, for relative residual tests
    };
    JetDir eval_dir(const ParamPoint& pt, const std::vector<double>& dir, Complex w) const;

private:
    Rational a0_;
    std::vector<std::string> params_;
    std::vector<Term> terms_;
};

// --- free operations -------------------------------------------------------

bool in_cone(const ParamPoint& ell);
IotaImage iota(const ParamPoint& ell);  // throws NotInCone

BarData bar_transform(const ConcretePolyExp& qc);  // requires a non-constant term

// Exponent vector of Qc without the constant term (ascending).
std::vector<double> exponents_of(const ConcretePolyExp& qc);

}  // namespace polyexp
