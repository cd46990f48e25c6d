#include "ncalc/cyclic.hpp"

#include <stdexcept>

namespace ncalc {

NecklaceElement NecklaceElement::word(int gens, const Word& w, const Rational& c) {
    NecklaceElement e(gens);
    e.add_word(w, c);
    return e;
}

void NecklaceElement::add_word(const Word& w, const Rational& c) {
    if (ncalc::is_zero(c)) return;
    for (int g : w)
        if (g < 0 || g >= gens_) throw std::out_of_range("generator index out of range");
    Word key = least_rotation(w);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (ncalc::is_zero(it->second)) terms_.erase(it);
    }
}

NecklaceElement& NecklaceElement::operator+=(const NecklaceElement& o) {
    if (gens_ != o.gens_) throw std::invalid_argument("generator-count mismatch");
    for (const auto& [w, c] : o.terms_) add_word(w, c);
    return *this;
}

NecklaceElement& NecklaceElement::operator-=(const NecklaceElement& o) {
    if (gens_ != o.gens_) throw std::invalid_argument("generator-count mismatch");
    for (const auto& [w, c] : o.terms_) add_word(w, -c);
    return *this;
}

NecklaceElement NecklaceElement::scaled(const Rational& s) const {
    NecklaceElement r(gens_);
    for (const auto& [w, c] : terms_) r.add_word(w, c * s);
    return r;
}

FreePoly NecklaceElement::representative() const {
    FreePoly p(gens_);
    for (const auto& [w, c] : terms_) p.add_term(w, c);
    return p;
}

std::string NecklaceElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        if (a != 1) s += (a.get_den() == 1 ? to_string(a) : "(" + to_string(a) + ")") + "*";
        s += "cyc(" + word_string(w, gens_) + ")";
    }
    return s;
}

NecklaceElement project_cyclic(const FreePoly& f) {
    NecklaceElement e(f.generator_count());
    for (const auto& [w, c] : f.terms()) e.add_word(w, c);
    return e;
}

FreePoly cyclic_derivative(const NecklaceElement& f, int i) {
    if (i < 0 || i >= f.generator_count()) throw std::out_of_range("generator index out of range");
    FreePoly out(f.generator_count());
    for (const auto& [w, c] : f.terms())
        for (std::size_t s = 0; s < w.size(); ++s) {
            if (w[s] != i) continue;
            Word r = rotate(w, s + 1);
            r.pop_back();
            out.add_term(r, c);
        }
    return out;
}

NecklaceElement apply_derivation(const DerivationSpec& theta, const NecklaceElement& f) {
    BasedAlgebra a = BasedAlgebra::free(f.generator_count());
    Elem img = theta.apply(a, a.from_free(f.representative()));
    return project_cyclic(a.to_free(img));
}

NecklaceElement necklace_bracket(const NecklaceElement& f, const NecklaceElement& g, const SymplecticLayout& layout) {
    if (f.generator_count() != layout.generator_count() || g.generator_count() != layout.generator_count())
        throw std::invalid_argument("layout mismatch");
    FreePoly acc(layout.generator_count());
    for (int i = 0; i < layout.n; ++i) {
        acc += cyclic_derivative(f, layout.x(i)) * cyclic_derivative(g, layout.y(i));
        acc -= cyclic_derivative(f, layout.y(i)) * cyclic_derivative(g, layout.x(i));
    }
    return project_cyclic(acc);
}

DerivationSpec hamiltonian_field(const NecklaceElement& f, const SymplecticLayout& layout) {
    if (f.generator_count() != layout.generator_count()) throw std::invalid_argument("layout mismatch");
    std::vector<FreePoly> images(static_cast<std::size_t>(layout.generator_count()), FreePoly(layout.generator_count()));
    for (int i = 0; i < layout.n; ++i) {
        images[static_cast<std::size_t>(layout.x(i))] = -cyclic_derivative(f, layout.y(i));
        images[static_cast<std::size_t>(layout.y(i))] = cyclic_derivative(f, layout.x(i));
    }
    return DerivationSpec::from_free(images);
}

SymPoly SymPoly::variable(int vars, int i) {
    SymPoly p(vars);
    Exponents e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, 1);
    return p;
}

SymPoly SymPoly::constant(int vars, const Rational& c) {
    SymPoly p(vars);
    p.add_term(Exponents(static_cast<std::size_t>(vars), 0), c);
    return p;
}

void SymPoly::add_term(const Exponents& e, const Rational& c) {
    if (ncalc::is_zero(c)) return;
    if (e.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("exponent length mismatch");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (ncalc::is_zero(it->second)) terms_.erase(it);
    }
}

SymPoly SymPoly::derivative(int i) const {
    SymPoly r(n_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<std::size_t>(i)];
        if (k == 0) continue;
        Exponents f = e;
        --f[static_cast<std::size_t>(i)];
        r.add_term(f, c * k);
    }
    return r;
}

int SymPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("variable count mismatch");
    SymPoly r(a.n_);
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) {
            SymPoly::Exponents e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

SymPoly SymPoly::scaled(const Rational& s) const {
    SymPoly r(n_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

std::string SymPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) mono += (mono.empty() ? "" : "*") + names[i];
        std::string cs = a.get_den() == 1 ? to_string(a) : "(" + to_string(a) + ")";
        if (mono.empty()) s += to_string(a).find('/') == std::string::npos ? to_string(a) : cs;
        else if (a == 1) s += mono;
        else s += cs + "*" + mono;
    }
    return s;
}

SymPoly kirillov_kostant(const SymPoly& f, const SymPoly& g, const LieAlgebraData& glie) {
    if (f.vars() != glie.dim || g.vars() != glie.dim) throw std::invalid_argument("dimension mismatch");
    const int n = glie.dim;
    std::vector<SymPoly> df, dg;
    for (int i = 0; i < n; ++i) {
        df.push_back(f.derivative(i));
        dg.push_back(g.derivative(i));
    }
    SymPoly out(n);
    for (int k = 0; k < n; ++k) {
        SymPoly inner(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!is_zero(glie.at(i, j, k))) inner += (df[static_cast<std::size_t>(i)] * dg[static_cast<std::size_t>(j)]).scaled(glie.at(i, j, k));
        out += inner * SymPoly::variable(n, k);
    }
    return out;
}

}  // namespace ncalc
