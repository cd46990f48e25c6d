#include "ncalc/based_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncalc {

void elem_add(Elem& a, const Word& w, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = a.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) a.erase(it);
    }
}

void elem_add(Elem& a, const Elem& b, const Rational& scale) {
    for (const auto& [w, c] : b) elem_add(a, w, c * scale);
}

Elem elem_scaled(const Elem& a, const Rational& s) {
    Elem r;
    if (is_zero(s)) return r;
    for (const auto& [w, c] : a) r.emplace(w, c * s);
    return r;
}

Elem elem_unit() { return Elem{{Word{}, Rational(1)}}; }

BasedAlgebra BasedAlgebra::free(int generators) {
    BasedAlgebra b;
    b.kind_ = Kind::Free;
    b.gens_ = generators;
    return b;
}

BasedAlgebra BasedAlgebra::commutative(int generators) {
    BasedAlgebra b;
    b.kind_ = Kind::Commutative;
    b.gens_ = generators;
    return b;
}

BasedAlgebra BasedAlgebra::findim(StructureAlgebra a) {
    BasedAlgebra b;
    b.kind_ = Kind::FinDim;
    b.gens_ = a.dim() - 1;
    b.alg_ = std::make_shared<const StructureAlgebra>(std::move(a));
    return b;
}

Elem BasedAlgebra::mul_basis(const Word& u, const Word& v) const {
    Elem r;
    switch (kind_) {
    case Kind::Free:
        r.emplace(concat(u, v), 1);
        break;
    case Kind::Commutative: {
        Word w;
        w.reserve(u.size() + v.size());
        std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(w));
        r.emplace(std::move(w), 1);
        break;
    }
    case Kind::FinDim: {
        int i = u.empty() ? 0 : u[0];
        int j = v.empty() ? 0 : v[0];
        for (const auto& [k, c] : alg_->basis_product(i, j)) elem_add(r, k == 0 ? Word{} : Word{k}, c);
        break;
    }
    }
    return r;
}

Elem BasedAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem r;
    for (const auto& [u, c1] : a)
        for (const auto& [v, c2] : b) {
            Rational f = c1 * c2;
            for (const auto& [w, c] : mul_basis(u, v)) elem_add(r, w, f * c);
        }
    return r;
}

std::vector<Word> all_words(int letters, int length) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(length), 0);
    if (length == 0) return {Word{}};
    if (letters == 0) return {};
    while (true) {
        out.push_back(w);
        int pos = length - 1;
        while (pos >= 0 && w[static_cast<std::size_t>(pos)] == letters - 1) w[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++w[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::vector<Word> sorted_words(int letters, int length) {
    std::vector<Word> out;
    for (auto& w : all_words(letters, length))
        if (std::is_sorted(w.begin(), w.end())) out.push_back(std::move(w));
    return out;
}

std::vector<Word> BasedAlgebra::basis(int weight) const {
    switch (kind_) {
    case Kind::Free:
        return all_words(gens_, weight);
    case Kind::Commutative:
        return sorted_words(gens_, weight);
    case Kind::FinDim: {
        std::vector<Word> out{Word{}};
        for (int i = 1; i < alg_->dim(); ++i) out.push_back(Word{i});
        return out;
    }
    }
    return {};
}

std::vector<Word> BasedAlgebra::complement_basis(int weight) const {
    if (kind_ == Kind::FinDim) {
        std::vector<Word> out;
        for (int i = 1; i < alg_->dim(); ++i) out.push_back(Word{i});
        return out;
    }
    if (weight == 0) return {};
    return basis(weight);
}

std::vector<Word> BasedAlgebra::generators() const {
    if (kind_ == Kind::FinDim) return complement_basis(0);
    std::vector<Word> out;
    for (int g = 0; g < gens_; ++g) out.push_back(Word{g});
    return out;
}

std::string BasedAlgebra::basis_name(const Word& w) const {
    if (w.empty()) return "1";
    if (kind_ == Kind::FinDim) return alg_->basis_names()[static_cast<std::size_t>(w[0])];
    return word_string(w, gens_);
}

std::string BasedAlgebra::elem_string(const Elem& e) const {
    if (e.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : e) {
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        std::string cs = a.get_den() == 1 ? to_string(a) : "(" + to_string(a) + ")";
        if (w.empty()) s += to_string(a).find('/') == std::string::npos ? to_string(a) : cs;
        else if (a == 1) s += basis_name(w);
        else s += cs + "*" + basis_name(w);
    }
    return s;
}

Elem BasedAlgebra::from_free(const FreePoly& p) const {
    if (kind_ == Kind::FinDim) throw std::invalid_argument("free polynomial given for a finite-dimensional algebra");
    Elem e;
    for (const auto& [w, c] : p.terms()) {
        if (kind_ == Kind::Commutative) {
            Word s = w;
            std::sort(s.begin(), s.end());
            elem_add(e, s, c);
        } else {
            elem_add(e, w, c);
        }
    }
    return e;
}

FreePoly BasedAlgebra::to_free(const Elem& e) const {
    FreePoly p(gens_);
    for (const auto& [w, c] : e) p.add_term(w, c);
    return p;
}

Elem BasedAlgebra::from_vector(const CoeffVector& v) const {
    Elem e;
    for (std::size_t i = 0; i < v.size(); ++i) elem_add(e, i == 0 ? Word{} : Word{static_cast<int>(i)}, v[i]);
    return e;
}

CoeffVector BasedAlgebra::to_vector(const Elem& e) const {
    CoeffVector v(static_cast<std::size_t>(alg_->dim()), Rational(0));
    for (const auto& [w, c] : e) v[w.empty() ? 0 : static_cast<std::size_t>(w[0])] += c;
    return v;
}

}  // namespace ncalc
