#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncalc/based_algebra.hpp"

namespace ncalc {

// A derivation of a BasedAlgebra. Graded algebras: images of the generators.
// FinDim: images of every basis element (slot 0, the unit, must map to 0).
class DerivationSpec {
public:
    DerivationSpec() = default;
    explicit DerivationSpec(std::vector<Elem> images) : images_(std::move(images)) {}

    static DerivationSpec from_free(const std::vector<FreePoly>& images);
    static DerivationSpec euler(const BasedAlgebra& a);
    static DerivationSpec inner(const BasedAlgebra& a, const Elem& z);   // [z, -]

    const std::vector<Elem>& images() const { return images_; }

    Elem apply_basis(const BasedAlgebra& a, const Word& w) const;
    Elem apply(const BasedAlgebra& a, const Elem& e) const;

    // first basis pair (i, j) where Leibniz fails (FinDim only; graded derivations are free by construction)
    std::optional<std::pair<int, int>> leibniz_violation(const BasedAlgebra& a) const;

    friend bool operator==(const DerivationSpec& a, const DerivationSpec& b) { return a.images_ == b.images_; }

private:
    std::vector<Elem> images_;
};

DerivationSpec derivation_commutator(const BasedAlgebra& a, const DerivationSpec& x, const DerivationSpec& y);
DerivationSpec derivation_sum(const DerivationSpec& x, const DerivationSpec& y, const Rational& s = 1);

}  // namespace ncalc
