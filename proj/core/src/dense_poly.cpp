#include "polyexp/dense_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace polyexp {

RationalPoly RationalPoly::monomial(size_t k, Rational coeff) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = std::move(coeff);
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return RationalPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(i) * c_[i];
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> d = c_;
    Rational lc = c_.back();
    for (auto& x : d) x /= lc;
    return RationalPoly(std::move(d));
}

size_t RationalPoly::ord0() const {
    size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k;
}

RationalPoly RationalPoly::shifted_down(size_t k) const {
    if (ord0() < k) throw std::invalid_argument("shifted_down: not divisible by t^k");
    return RationalPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::mod(const RationalPoly& d, RationalPoly* quotient) const {
    if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> r = c_;
    std::vector<Rational> q;
    int dd = d.degree();
    if (degree() >= dd) q.assign(degree() - dd + 1, Rational(0));
    while (static_cast<int>(r.size()) - 1 >= dd) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < dd) break;
        size_t k = r.size() - 1 - dd;
        Rational f = r.back() / d.leading();
        q[k] = f;
        for (int i = 0; i <= dd; ++i) r[k + i] -= f * d.coeffs()[i];
        r.pop_back();
    }
    if (quotient) *quotient = RationalPoly(std::move(q));
    return RationalPoly(std::move(r));
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
    while (!b.is_zero()) {
        RationalPoly r = a.mod(b.monic());
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p) {
    std::vector<RationalPoly> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm (characteristic 0).
    RationalPoly f = p.monic();
    RationalPoly fp = f.derivative();
    RationalPoly a = poly_gcd(f, fp);
    RationalPoly b, c, d;
    f.mod(a, &b);
    fp.mod(a, &c);
    d = c - b.derivative();
    while (true) {
        if (b.degree() <= 0) break;
        RationalPoly g = poly_gcd(b, d);
        out.push_back(g.monic());
        RationalPoly b2, c2;
        b.mod(g, &b2);
        d.mod(g, &c2);
        b = std::move(b2);
        d = c2 - b.derivative();
    }
    return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kPrime = 2305843009213693951ull;  // 2^61 - 1

u64 mulmod(u64 a, u64 b) { return static_cast<u64>((u128)a * b % kPrime); }

u64 powmod(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a) { return powmod(a, kPrime - 2); }

// Reduce a rational mod p; fails (returns false) if the denominator vanishes.
bool reduce(const Rational& r, u64& out) {
    Int num = boost::multiprecision::numerator(r) % kPrime;
    Int den = boost::multiprecision::denominator(r) % kPrime;
    if (den == 0) return false;
    u64 n = static_cast<u64>(num < 0 ? num + kPrime : num);
    u64 d = static_cast<u64>(den);
    out = mulmod(n, invmod(d));
    return true;
}

}  // namespace

bool squarefree_certificate(const RationalPoly& p) {
    if (p.degree() <= 0) return false;
    std::vector<u64> a(p.degree() + 1), b;
    for (int i = 0; i <= p.degree(); ++i)
        if (!reduce(p.coeffs()[i], a[i])) return false;
    if (a.back() == 0) return false;  // leading coefficient must survive mod p
    b.resize(p.degree());
    for (int i = 1; i <= p.degree(); ++i) b[i - 1] = mulmod(a[i], i % kPrime);
    auto trim = [](std::vector<u64>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(b);
    // Euclid over Z/p.
    while (!b.empty()) {
        u64 inv_lb = invmod(b.back());
        while (a.size() >= b.size()) {
            trim(a);
            if (a.size() < b.size()) break;
            u64 f = mulmod(a.back(), inv_lb);
            size_t k = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                u64 sub = mulmod(f, b[i]);
                a[k + i] = (a[k + i] >= sub) ? a[k + i] - sub : a[k + i] + kPrime - sub;
            }
            a.pop_back();
        }
        std::swap(a, b);
        trim(b);
    }
    trim(a);
    return a.size() == 1;  // gcd is a nonzero constant
}

std::vector<double> RationalPoly::to_doubles() const {
    std::vector<double> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = to_double(c_[i]);
    return out;
}

std::string RationalPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1) os << rational_str(mag);
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace polyexp
