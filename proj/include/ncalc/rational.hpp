#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace ncalc {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);   // "p" or "p/q"
std::string to_pq(const Rational& q);       // always "p/q"

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Polynomials in the central parameter t.
class TPoly {
public:
    TPoly() = default;
    TPoly(const Rational& c);   // NOLINT(implicit)
    TPoly(int c) : TPoly(Rational(c)) {}
    static TPoly t_power(unsigned e, const Rational& c = 1);

    const std::map<unsigned, Rational>& coeffs() const { return c_; }
    Rational coeff(unsigned e) const;
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.rbegin()->first); }
    Rational at_zero() const { return coeff(0); }
    Rational eval(const Rational& t) const;
    // divides by t; throws if the constant term is nonzero
    TPoly div_t() const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
    friend TPoly operator-(TPoly a) { for (auto& [e, c] : a.c_) c = -c; return a; }
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<unsigned, Rational> c_;
};

inline bool is_zero(const TPoly& p) { return p.is_zero(); }
std::string to_string(const TPoly& p);

// a + eps*b with eps^2 = 0, over any commutative coefficient ring.
template <class C>
struct DualT {
    C value{};
    C eps{};

    DualT() = default;
    DualT(C v) : value(std::move(v)) {}   // NOLINT(implicit)
    DualT(C v, C e) : value(std::move(v)), eps(std::move(e)) {}

    DualT& operator+=(const DualT& o) { value += o.value; eps += o.eps; return *this; }
    DualT& operator-=(const DualT& o) { value -= o.value; eps -= o.eps; return *this; }
    DualT& operator*=(const DualT& o) {
        C e = value * o.eps + eps * o.value;
        value = value * o.value;
        eps = std::move(e);
        return *this;
    }
    friend DualT operator+(DualT a, const DualT& b) { return a += b; }
    friend DualT operator-(DualT a, const DualT& b) { return a -= b; }
    friend DualT operator*(DualT a, const DualT& b) { return a *= b; }
    friend DualT operator-(const DualT& a) { return DualT(C() - a.value, C() - a.eps); }
    friend bool operator==(const DualT& a, const DualT& b) { return a.value == b.value && a.eps == b.eps; }
    friend bool operator!=(const DualT& a, const DualT& b) { return !(a == b); }
};

using DualScalar = DualT<Rational>;

template <class C>
bool is_zero(const DualT<C>& d) { return is_zero(d.value) && is_zero(d.eps); }

std::string to_string(const DualScalar& d);

}  // namespace ncalc
