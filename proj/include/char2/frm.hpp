#pragma once

#include <optional>
#include <random>
#include <vector>

#include "char2/rep.hpp"

namespace char2 {

bool is_symmetric(const GfMat& B);
bool is_alternating(const GfMat& B);  // symmetric with zero diagonal

/// Quadratic form in the standard basis: Q(Σλ_i e_i) = Σ λ_i² diag_i +
/// Σ_{i<j} λ_i λ_j gram_{ij}.  The strict upper triangle of gram is what
/// enters evaluation; for alternating gram this polarizes to gram itself.
struct QuadForm {
    GfMat diag;  // 1 x n
    GfMat gram;  // n x n

    FElem eval(const GfMat& v) const;  // v is 1 x n
};

// B(u, v) = Q(u+v) + Q(u) + Q(v), recomputed from scratch
GfMat polarize(const QuadForm& Q);

// basis of { X : ρ(g) X ρ(g)ᵀ = X for all generators } (row convention)
std::vector<GfMat> invariant_bilinear_space(const Rep& M);

// is B invariant under every generator (and so under G)
bool form_invariant(const Rep& M, const GfMat& B);
// full-group certificate, desk scale (walks every element)
bool form_invariant_full(const Rep& M, const GfMat& B);

bool quad_invariant(const Rep& M, const QuadForm& Q);
bool quad_invariant_full(const Rep& M, const QuadForm& Q);

// nondegenerate invariant alternating form on a nontrivial self-dual simple
// (Fong's Lemma); normalized so its first nonzero entry is 1
GfMat fong_form(const Rep& M, std::mt19937_64& rng);

// G-invariant quadratic form polarizing to B, when one exists
std::optional<QuadForm> invariant_quadratic_for(const Rep& M, const GfMat& B);
// dimension of the homogeneous solution space (invariant forms polarizing
// to zero); 0 certifies uniqueness
int invariant_quadratic_space_dim(const Rep& M);

// the quadratic-type decision for a nontrivial self-dual simple
std::optional<QuadForm> quadratic_type(const Rep& M, std::mt19937_64& rng);

// block-diagonal induced forms over the fixed right transversal
GfMat induce_bilinear(const GfMat& b, int index);
QuadForm induce_quadratic(const QuadForm& q, int index);

// the Sin-Willems form on U ⊗ V: vanishes on basic tensors, polarizes to
// the Kronecker product of the (alternating) inputs
QuadForm tensor_quadratic(const GfMat& BU, const GfMat& BV);

}  // namespace char2
