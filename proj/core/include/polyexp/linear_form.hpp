#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <type_traits>

#include "polyexp/rational.hpp"

namespace polyexp {

// Rational-coefficient linear form over named parameters, e.g. 2u - a + 2b + 3c.
// Zero coefficients are never stored, so equality is plain member comparison.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(Rational constant) : constant_(std::move(constant)) {}

    static LinearForm variable(const std::string& name, Rational coeff = Rational(1)) {
        LinearForm f;
        f.set_coeff(name, std::move(coeff));
        return f;
    }

    void set_coeff(const std::string& name, Rational c) {
        if (c == 0)
            coeffs_.erase(name);
        else
            coeffs_[name] = std::move(c);
    }
    Rational coeff(const std::string& name) const {
        auto it = coeffs_.find(name);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
    const Rational& constant() const { return constant_; }
    void set_constant(Rational c) { constant_ = std::move(c); }

    bool is_constant() const { return coeffs_.empty(); }
    bool is_zero() const { return coeffs_.empty() && constant_ == 0; }

    template <class Lookup>  // Lookup: name -> value (Rational or double)
    auto evaluate(const Lookup& value_of) const {
        using V = decltype(value_of(std::string()));
        V acc = static_cast<V>(0);
        for (const auto& [name, c] : coeffs_) acc += static_cast<V>(value_of(name)) * convert<V>(c);
        return acc + convert<V>(constant_);
    }

    LinearForm& operator+=(const LinearForm& o) {
        for (const auto& [n, c] : o.coeffs_) set_coeff(n, coeff(n) + c);
        constant_ += o.constant_;
        return *this;
    }
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    LinearForm& operator-=(const LinearForm& o) {
        for (const auto& [n, c] : o.coeffs_) set_coeff(n, coeff(n) - c);
        constant_ -= o.constant_;
        return *this;
    }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const Rational& r, const LinearForm& f) {
        LinearForm out;
        if (r == 0) return out;
        for (const auto& [n, c] : f.coeffs_) out.coeffs_[n] = r * c;
        out.constant_ = r * f.constant_;
        return out;
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    // Arbitrary but total order, used only as a container key.
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        if (a.constant_ != b.constant_) return a.constant_ < b.constant_;
        return std::lexicographical_compare(
            a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
            [](const auto& x, const auto& y) {
                if (x.first != y.first) return x.first < y.first;
                return x.second < y.second;
            });
    }

    std::string str(const std::string& var = "") const;

private:
    template <class V>
    static V convert(const Rational& r) {
        if constexpr (std::is_same_v<V, Rational>)
            return r;
        else
            return static_cast<V>(to_double(r));
    }

    std::map<std::string, Rational> coeffs_;
    Rational constant_ = 0;
};

}  // namespace polyexp
