#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "ncalc/rational.hpp"
#include "ncalc/word.hpp"

namespace ncalc {

// Element of k<x_0..x_{r-1}> with coefficients in C (Rational, TPoly or DualScalar).
template <class C>
class FreePolyT {
public:
    using Terms = std::map<Word, C, LenLex>;

    explicit FreePolyT(int generator_count = 0) : gens_(generator_count) {}

    static FreePolyT constant(int gens, const C& c) {
        FreePolyT p(gens);
        p.add_term({}, c);
        return p;
    }
    static FreePolyT monomial(int gens, const Word& w, const C& c = C(1)) {
        FreePolyT p(gens);
        p.add_term(w, c);
        return p;
    }
    static FreePolyT generator(int gens, int g) { return monomial(gens, Word{g}); }

    int generator_count() const { return gens_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? C() : it->second;
    }

    void add_term(const Word& w, const C& c) {
        for (int g : w)
            if (g < 0 || g >= gens_) throw std::out_of_range("generator index out of range");
        if (ncalc::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (ncalc::is_zero(it->second)) terms_.erase(it);
        }
    }

    // highest word length present, -1 for zero
    int max_weight() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

    FreePolyT weight_component(std::size_t w) const {
        FreePolyT r(gens_);
        for (const auto& [word, c] : terms_)
            if (word.size() == w) r.terms_.emplace(word, c);
        return r;
    }

    FreePolyT& operator+=(const FreePolyT& o) {
        check_same(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    FreePolyT& operator-=(const FreePolyT& o) {
        check_same(o);
        for (const auto& [w, c] : o.terms_) add_term(w, C() - c);
        return *this;
    }
    FreePolyT scaled(const C& s) const {
        FreePolyT r(gens_);
        for (const auto& [w, c] : terms_) r.add_term(w, c * s);
        return r;
    }

    friend FreePolyT operator+(FreePolyT a, const FreePolyT& b) { return a += b; }
    friend FreePolyT operator-(FreePolyT a, const FreePolyT& b) { return a -= b; }
    friend FreePolyT operator-(const FreePolyT& a) { return a.scaled(C() - C(1)); }
    friend FreePolyT operator*(const FreePolyT& a, const FreePolyT& b) {
        a.check_same(b);
        FreePolyT r(a.gens_);
        for (const auto& [u, c1] : a.terms_)
            for (const auto& [v, c2] : b.terms_) r.add_term(concat(u, v), c1 * c2);
        return r;
    }
    friend bool operator==(const FreePolyT& a, const FreePolyT& b) {
        return a.gens_ == b.gens_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FreePolyT& a, const FreePolyT& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            std::string cs = to_string(c);
            bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+ ", 1) == std::string::npos;
            if (neg) cs = cs.substr(1);
            bool simple = cs.find_first_of("+-* ") == std::string::npos;
            if (!s.empty()) s += neg ? " - " : " + ";
            else if (neg) s += "-";
            std::string ws = w.empty() ? "" : word_string(w, gens_);
            if (w.empty()) s += simple ? cs : "(" + cs + ")";
            else if (cs == "1") s += ws;
            else s += (simple && cs.find('/') == std::string::npos ? cs : "(" + cs + ")") + "*" + ws;
        }
        return s;
    }

private:
    void check_same(const FreePolyT& o) const {
        if (gens_ != o.gens_) throw std::invalid_argument("generator-count mismatch");
    }

    int gens_;
    Terms terms_;
};

using FreePoly = FreePolyT<Rational>;

template <class C>
FreePolyT<C> free_mul(const FreePolyT<C>& a, const FreePolyT<C>& b) { return a * b; }

template <class C>
FreePolyT<C> free_commutator(const FreePolyT<C>& a, const FreePolyT<C>& b) { return a * b - b * a; }

}  // namespace ncalc
