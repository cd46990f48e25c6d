#include "ncalc/rational.hpp"

#include <cctype>

namespace ncalc {

Rational parse_rational(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) throw std::invalid_argument("malformed rational: " + raw);
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw std::invalid_argument("malformed rational: " + raw);
    };
    std::string num = s.substr(0, slash);
    if (!num.empty() && num[0] == '+') num = num.substr(1);
    check_int(num);
    Rational q;
    if (slash == std::string::npos) {
        q = mpz_class(num);
    } else {
        std::string den = s.substr(slash + 1);
        check_int(den);
        mpz_class d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: " + raw);
        q = Rational(mpz_class(num), d);
        q.canonicalize();
    }
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_pq(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

TPoly::TPoly(const Rational& c) {
    if (!ncalc::is_zero(c)) c_[0] = c;
}

TPoly TPoly::t_power(unsigned e, const Rational& c) {
    TPoly p;
    if (!ncalc::is_zero(c)) p.c_[e] = c;
    return p;
}

Rational TPoly::coeff(unsigned e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rational(0) : it->second;
}

Rational TPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (const auto& [e, c] : c_) {
        Rational term = c;
        for (unsigned k = 0; k < e; ++k) term *= t;
        acc += term;
    }
    return acc;
}

TPoly TPoly::div_t() const {
    if (!ncalc::is_zero(coeff(0))) throw std::domain_error("polynomial in t not divisible by t");
    TPoly r;
    for (const auto& [e, c] : c_) r.c_[e - 1] = c;
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    for (const auto& [e, c] : o.c_) {
        Rational& slot = c_[e];
        slot += c;
        if (ncalc::is_zero(slot)) c_.erase(e);
    }
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    for (const auto& [e, c] : o.c_) {
        Rational& slot = c_[e];
        slot -= c;
        if (ncalc::is_zero(slot)) c_.erase(e);
    }
    return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
    std::map<unsigned, Rational> out;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) out[e1 + e2] += c1 * c2;
    for (auto it = out.begin(); it != out.end();)
        it = ncalc::is_zero(it->second) ? out.erase(it) : std::next(it);
    c_ = std::move(out);
    return *this;
}

std::string TPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : c_) {
        std::string mag = to_string(abs(c));
        bool neg = sgn(c) < 0;
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        if (e == 0) { s += mag; continue; }
        if (abs(c) != 1) s += (c.get_den() == 1 ? mag : "(" + mag + ")") + "*";
        s += "t";
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string to_string(const TPoly& p) { return p.str(); }

std::string to_string(const DualScalar& d) {
    return to_string(d.value) + " + eps*(" + to_string(d.eps) + ")";
}

}  // namespace ncalc
