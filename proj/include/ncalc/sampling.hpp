#pragma once

#include <vector>

#include "ncalc/based_algebra.hpp"
#include "ncalc/derivation.hpp"
#include "ncalc/free_poly.hpp"
#include "ncalc/random.hpp"

namespace ncalc {

Elem random_elem(const BasedAlgebra& a, Rng& rng, int max_weight, int terms);
FreePoly random_free(int gens, Rng& rng, int min_weight, int max_weight, int terms);
// graded: random generator images; FinDim: a random inner derivation
DerivationSpec random_derivation(const BasedAlgebra& a, Rng& rng, int max_weight = 2);
CoeffVector random_vector(int dim, Rng& rng);

}  // namespace ncalc
