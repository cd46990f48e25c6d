#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ncalc/based_algebra.hpp"
#include "ncalc/random.hpp"
#include "ncalc/structure_algebra.hpp"

// Randomized and exhaustive identity checks. Each returns nullopt on success and a
// description of a concrete failing input otherwise.
namespace ncalc::checks {

using Outcome = std::optional<std::string>;

// core
Outcome free_ring_axioms(Rng& rng, int samples);
Outcome structure_associativity(Rng& rng, int samples);
Outcome dual_numbers(Rng& rng, int samples);
Outcome tpoly_ring(Rng& rng, int samples);

// cyclic words
Outcome cyclic_trace_property(Rng& rng, int samples);
Outcome cyclic_poincare_identity(Rng& rng, int samples);
Outcome necklace_antisymmetry(Rng& rng, int pairs, int samples, int max_weight);
Outcome necklace_jacobi(Rng& rng, int pairs, int samples, int max_weight);
Outcome hamiltonian_lie_map(Rng& rng, int pairs, int samples, int max_weight);
Outcome kirillov_kostant_identities(Rng& rng, int samples);

// noncommutative forms
enum class Karoubi { DbPlusBd, KappaD, KappaN, KappaN1, Polynomial };
const char* karoubi_name(Karoubi k);
Outcome karoubi_identity(Karoubi which, const BasedAlgebra& a, Rng& rng, int samples, int max_degree, int max_weight);
enum class Cartan { Formula, LieLie, LieContraction, ContractionSquare };
const char* cartan_name(Cartan c);
Outcome cartan_identity(Cartan which, const BasedAlgebra& a, Rng& rng, int samples, int max_weight);
Outcome forms_d_squared(const BasedAlgebra& a, Rng& rng, int samples);
Outcome forms_b_squared(const BasedAlgebra& a, Rng& rng, int samples);
Outcome forms_d_odd_derivation(const BasedAlgebra& a, Rng& rng, int samples);
Outcome dr0_necklaces(Rng& rng, int max_weight);
Outcome closed_dr2_commutators(int max_weight);
Outcome poincare_primitives(Rng& rng, int samples);
Outcome quillen_exact(int gens, int max_weight);
Outcome dr_idempotent();

// Hochschild
Outcome hh_chain_d_squared(Rng& rng, int samples);
Outcome hh_cochain_d_squared(Rng& rng, int samples);
Outcome hh_representatives();
Outcome hh_center_and_derivations();
Outcome gerstenhaber_cup_identity(const StructureAlgebra& a, Rng& rng, int samples);
Outcome gerstenhaber_compatibility(const StructureAlgebra& a, Rng& rng, int samples);
Outcome gerstenhaber_lie(const StructureAlgebra& a, Rng& rng, int samples);
Outcome cup_commutative_in_cohomology(const StructureAlgebra& a, int max_degree);
Outcome lm_equals_b(const StructureAlgebra& a, int max_degree);
// HH_p(k[x,y]) in weight w against the form-monomial count C(2,p) dim k[x,y]_{w-p}
Outcome hkr_graded(int max_weight);
Outcome smoothness_verdict(const StructureAlgebra& a, bool expect_smooth);
Outcome morita_trace(const StructureAlgebra& a, int r);

// star products
Outcome moyal_associativity(Rng& rng, int pairs, int samples, int max_degree);
Outcome moyal_commutator(int pairs);
// all pairs of monomials, each of total degree <= max_total_degree
Outcome moyal_intertwining(int pairs, int max_total_degree);
Outcome moyal_poisson_leading(Rng& rng, int samples);
Outcome poisson_leibniz_jacobi(Rng& rng, int samples);
Outcome heisenberg_exponential();

// representation functor
Outcome rep_multiplicative(Rng& rng, int samples, int n);
Outcome rep_unital(int n);
Outcome rep_trace_commutators(Rng& rng, int samples, int n);
Outcome rep_trace_cyclic(Rng& rng, int samples, int n);
Outcome rep_forms_d(Rng& rng, int samples);
Outcome rep_forms_supercommutators(Rng& rng, int samples);
Outcome rep_vector_field_hom(Rng& rng, int samples);
Outcome rep_chain_rule(Rng& rng, int samples);
Outcome rep_dual_numbers(Rng& rng, int samples);
Outcome schouten_identities(Rng& rng, int samples);

// Chern-Weil
Outcome wnc_d_squared(Rng& rng, int samples);
Outcome wnc_acyclic(const StructureAlgebra& a, int max_degree);
Outcome gs_antisymmetry(Rng& rng, int samples);
Outcome gs_jacobi(Rng& rng, int samples);
// d P = (1/2){sum b_j^2, P}
Outcome gs_d_half_laplacian(Rng& rng, int samples);
// d P = {sum b_j^2, P} as literally stated
Outcome gs_d_literal(Rng& rng, int samples);
Outcome gs_chern_closed(int k_max, int n_max);
Outcome gs_chern_brackets(int k_max, int n_max);
Outcome gs_transgression(int k_max, int n_max);
Outcome dga_bianchi(Rng& rng, int samples);
Outcome chern_simons(int n_max);
Outcome weil_d_squared(const LieAlgebraData& g, int max_degree);
Outcome weil_acyclic(const LieAlgebraData& g, int max_degree);
Outcome weil_cartan_formula(const LieAlgebraData& g, int max_degree);
Outcome weil_invariants_closed();

// K-theory
Outcome k_idempotent_identities(Rng& rng, int conjugations);
Outcome k_c0_closed();
Outcome k_c1_cycle(Rng& rng, int samples);
Outcome k_chk_closed(int k_max);
Outcome k_conjugation_invariance(Rng& rng, int samples);
Outcome k_direct_sum();
Outcome k_curvature_trace(Rng& rng, int samples);

}  // namespace ncalc::checks
