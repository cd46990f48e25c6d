#include "ncalc/derivation.hpp"

#include <stdexcept>

namespace ncalc {

DerivationSpec DerivationSpec::from_free(const std::vector<FreePoly>& images) {
    std::vector<Elem> out;
    for (const auto& p : images) {
        Elem e;
        for (const auto& [w, c] : p.terms()) elem_add(e, w, c);
        out.push_back(std::move(e));
    }
    return DerivationSpec(std::move(out));
}

DerivationSpec DerivationSpec::euler(const BasedAlgebra& a) {
    if (!a.graded()) throw std::invalid_argument("Euler derivation needs a graded algebra");
    std::vector<Elem> out;
    for (int g = 0; g < a.generator_count(); ++g) out.push_back(Elem{{Word{g}, Rational(1)}});
    return DerivationSpec(std::move(out));
}

DerivationSpec DerivationSpec::inner(const BasedAlgebra& a, const Elem& z) {
    std::vector<Elem> out;
    std::vector<Word> keys = a.graded() ? a.generators() : a.basis(0);
    for (const auto& k : keys) {
        Elem x{{k, Rational(1)}};
        Elem r = a.mul(z, x);
        elem_add(r, a.mul(x, z), -1);
        out.push_back(std::move(r));
    }
    return DerivationSpec(std::move(out));
}

Elem DerivationSpec::apply_basis(const BasedAlgebra& a, const Word& w) const {
    if (!a.graded()) {
        std::size_t i = w.empty() ? 0 : static_cast<std::size_t>(w[0]);
        if (i >= images_.size()) throw std::out_of_range("derivation image missing");
        return images_[i];
    }
    Elem out;
    for (std::size_t s = 0; s < w.size(); ++s) {
        auto g = static_cast<std::size_t>(w[s]);
        if (g >= images_.size()) throw std::out_of_range("derivation image missing");
        Elem left{{slice(w, 0, s), Rational(1)}};
        Elem right{{slice(w, s + 1, w.size()), Rational(1)}};
        elem_add(out, a.mul(a.mul(left, images_[g]), right));
    }
    return out;
}

Elem DerivationSpec::apply(const BasedAlgebra& a, const Elem& e) const {
    Elem out;
    for (const auto& [w, c] : e) elem_add(out, apply_basis(a, w), c);
    return out;
}

std::optional<std::pair<int, int>> DerivationSpec::leibniz_violation(const BasedAlgebra& a) const {
    if (a.graded()) return std::nullopt;
    if (!images_.at(0).empty()) return std::make_pair(0, 0);
    auto basis = a.basis(0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Elem ei{{basis[i], Rational(1)}}, ej{{basis[j], Rational(1)}};
            Elem lhs = apply(a, a.mul(ei, ej));
            Elem rhs = a.mul(apply(a, ei), ej);
            elem_add(rhs, a.mul(ei, apply(a, ej)));
            if (lhs != rhs) return std::make_pair(static_cast<int>(i), static_cast<int>(j));
        }
    return std::nullopt;
}

DerivationSpec derivation_commutator(const BasedAlgebra& a, const DerivationSpec& x, const DerivationSpec& y) {
    std::vector<Word> keys = a.graded() ? a.generators() : a.basis(0);
    std::vector<Elem> out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        Elem r = x.apply(a, y.images()[i]);
        elem_add(r, y.apply(a, x.images()[i]), -1);
        out.push_back(std::move(r));
    }
    return DerivationSpec(std::move(out));
}

DerivationSpec derivation_sum(const DerivationSpec& x, const DerivationSpec& y, const Rational& s) {
    std::vector<Elem> out = x.images();
    for (std::size_t i = 0; i < out.size(); ++i) elem_add(out[i], y.images()[i], s);
    return DerivationSpec(std::move(out));
}

}  // namespace ncalc
