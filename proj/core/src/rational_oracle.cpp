#include "polyexp/rational_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace polyexp {

RationalPoly SparsePolynomial::dense() const {
    if (terms.empty()) return RationalPoly();
    std::vector<Rational> c(static_cast<size_t>(terms.back().first) + 1, Rational(0));
    for (const auto& [k, a] : terms) c[static_cast<size_t>(k)] = a;
    return RationalPoly(std::move(c));
}

SparsePolynomial specialize(const PolyExponential& q, const ParamPoint& ell) {
    if (!ell.is_exact())
        throw NotInCone("specialize requires an exact rational parameter point");
    // Cone condition on the instantiated exponents (parameter values themselves
    // may be negative when the exponents are linear forms of them).
    for (const auto& t : q.terms()) {
        Rational e = t.exponent.evaluate(
            [&](const std::string& n) -> Rational { return ell.exact_value_of(n); });
        if (!(e > 0)) throw NotInCone("specialize requires strictly positive instantiated ℓ");
    }

    ConcretePolyExp qc = q.instantiate(ell);  // exact exponents, merged

    // r = lcm(denominators)/gcd(numerators) over the nonzero exponents makes
    // r·(exponents) integer with overall gcd 1.
    Int L = 1, G = 0;
    for (const auto& t : qc.terms()) {
        const Rational& e = *t.exp_exact;
        if (e == 0) continue;
        L = boost::multiprecision::lcm(L, Int(boost::multiprecision::denominator(e)));
    }
    for (const auto& t : qc.terms()) {
        const Rational& e = *t.exp_exact;
        if (e == 0) continue;
        Int k = boost::multiprecision::numerator(e * Rational(L));
        G = boost::multiprecision::gcd(G, k);
    }
    SparsePolynomial p;
    if (G == 0) {  // constant poly-exponential (all terms merged into a0)
        p.terms.push_back({0, qc.terms().front().coeff_exact});
        p.scale = 1;
        return p;
    }
    p.scale = Rational(L, G);
    for (const auto& t : qc.terms()) {
        Rational ke = *t.exp_exact * p.scale;
        // ke is integral by construction of the scale.
        p.terms.push_back({boost::multiprecision::numerator(ke).convert_to<long long>(),
                           t.coeff_exact});
    }
    std::sort(p.terms.begin(), p.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return p;
}

std::vector<std::pair<Complex, int>> poly_roots(const SparsePolynomial& p) {
    RationalPoly dense = p.dense();
    if (dense.degree() < 1) return {};

    std::vector<std::pair<Complex, int>> out;
    if (squarefree_certificate(dense)) {
        for (Complex z : poly_roots_numeric(dense.to_doubles())) out.push_back({z, 1});
        return out;
    }
    std::vector<RationalPoly> factors = squarefree_decomposition(dense);
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        for (Complex z : poly_roots_numeric(factors[i].to_doubles()))
            out.push_back({z, static_cast<int>(i + 1)});
    }
    return out;
}

std::vector<SpectrumClass> spectrum_classes(const PolyExponential& q, const ParamPoint& ell) {
    SparsePolynomial p = specialize(q, ell);
    if (p.degree() < 1) throw EmptySpectrum("specialized polynomial is a nonzero constant");
    ConcretePolyExp qc = q.instantiate(ell);

    double r = to_double(p.scale);
    std::vector<SpectrumClass> out;
    for (const auto& [t, mult] : poly_roots(p)) {
        SpectrumClass sc;
        sc.t = t;
        sc.multiplicity = mult;
        sc.scale = p.scale;
        double arg = std::arg(t);
        if (arg < 0) arg += 2 * M_PI;
        sc.w = Complex(r * std::log(std::abs(t)), r * arg);
        sc.residual = std::abs(qc.eval(sc.w));
        out.push_back(sc);
    }
    std::sort(out.begin(), out.end(), [](const SpectrumClass& a, const SpectrumClass& b) {
        if (a.w.real() != b.w.real()) return a.w.real() < b.w.real();
        return a.w.imag() < b.w.imag();
    });
    return out;
}

OrderedSpectrum rho_lambda(const PolyExponential& q, const ParamPoint& ell) {
    std::vector<double> re;
    for (const auto& sc : spectrum_classes(q, ell))
        for (int i = 0; i < sc.multiplicity; ++i) re.push_back(sc.w.real());
    std::sort(re.begin(), re.end());
    return OrderedSpectrum(std::move(re));
}

double OrderedSpectrum::rho(size_t i) const {
    if (i < 1 || i > re_.size()) throw OutOfRange("rho index " + std::to_string(i));
    return re_[re_.size() - i];
}

double OrderedSpectrum::lambda(size_t i) const {
    if (i < 1 || i > re_.size()) throw OutOfRange("lambda index " + std::to_string(i));
    return re_[i - 1];
}

bool congruent(Complex w1, Complex w2, const ParamPoint& ell, double tol) {
    for (size_t i = 0; i < ell.size(); ++i) {
        Complex c = ell.value(i) * (w1 - w2);
        // c must lie in 2πi·Z: real part ~ 0 and imaginary part ~ 2π·integer.
        double v = c.imag() / (2 * M_PI);
        if (std::abs(v - std::round(v)) > tol) return false;
        if (std::abs(c.real()) / (2 * M_PI) > tol) return false;
    }
    return true;
}

}  // namespace polyexp
