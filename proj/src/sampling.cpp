#include "ncalc/sampling.hpp"

namespace ncalc {

Elem random_elem(const BasedAlgebra& a, Rng& rng, int max_weight, int terms) {
    Elem e;
    for (int t = 0; t < terms; ++t) {
        int w = a.graded() ? static_cast<int>(rng.uniform(0, max_weight)) : 0;
        auto basis = a.basis(w);
        if (basis.empty()) continue;
        const auto& word = basis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(basis.size()) - 1))];
        elem_add(e, Elem{{word, rng.nonzero_rational()}});
    }
    return e;
}

FreePoly random_free(int gens, Rng& rng, int min_weight, int max_weight, int terms) {
    FreePoly p(gens);
    for (int t = 0; t < terms; ++t) {
        auto len = rng.uniform(min_weight, max_weight);
        Word w;
        for (long i = 0; i < len; ++i) w.push_back(static_cast<int>(rng.uniform(0, gens - 1)));
        p.add_term(w, rng.nonzero_rational());
    }
    return p;
}

DerivationSpec random_derivation(const BasedAlgebra& a, Rng& rng, int max_weight) {
    if (!a.graded()) return DerivationSpec::inner(a, random_elem(a, rng, 0, 3));
    std::vector<Elem> images;
    for (int g = 0; g < a.generator_count(); ++g) images.push_back(random_elem(a, rng, max_weight, 2));
    return DerivationSpec(images);
}

CoeffVector random_vector(int dim, Rng& rng) {
    CoeffVector v(static_cast<std::size_t>(dim));
    for (auto& c : v) c = rng.small_rational();
    return v;
}

}  // namespace ncalc
