#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "char2/gfmat.hpp"
#include "char2/gfpoly.hpp"
#include "char2/perm.hpp"

namespace char2 {

/// Matrix representation of a permutation group over GF(2^k).  Row-vector
/// convention: vectors act from the left, v -> v * R(g), and
/// R(gh) = R(g) R(h).  Generator matrices are aligned with G->generators().
struct Rep {
    const Field* F = nullptr;
    const PermGroup* G = nullptr;
    int dim = 0;
    std::vector<GfMat> gens;
    std::string label;  // stable identifier, assigned by the labeling pass

    // evaluate at an arbitrary element by its BFS word
    GfMat at(int elem_index) const;
    GfMat at(const Perm& g) const;
    // multiplicative check R(gh) = R(g)R(h) for g a generator, h arbitrary
    bool is_homomorphism() const;
};

Rep trivial_rep(const PermGroup& G, const Field* F);
Rep perm_rep(const PermGroup& G, const Field* F);
Rep regular_rep(const PermGroup& G, const Field* F);
Rep dual_rep(const Rep& R);
Rep tensor_rep(const Rep& A, const Rep& B);  // Kronecker, same group
// H must be a subgroup of *R.G; result is an H-representation
Rep restrict_rep(const Rep& R, const PermGroup& H);
// g must normalize *R.G; the conjugate module X^g with X^g(n) = X(gng^-1)
Rep conjugate_rep(const Rep& R, const Perm& g);
// representatives r_i of the right cosets H r_i, identity first
std::vector<Perm> right_transversal(const PermGroup& G, const PermGroup& H);
// induce an H-module up to G (H = *R.G a subgroup of G)
Rep induce_rep(const Rep& R, const PermGroup& G);

// action on an invariant row-space / on the quotient by it
Rep sub_rep(const Rep& R, const GfMat& basis);
Rep quotient_rep(const Rep& R, const GfMat& basis);
// smallest invariant subspace containing the rows of seeds
EchelonBasis spin(const Rep& R, const GfMat& seeds);

/// Random group-algebra element as a formal sum of generator words, so the
/// same element can be evaluated consistently in different modules.
struct AlgebraElem {
    std::vector<std::vector<int>> words;  // generator index strings
    std::vector<FElem> coeffs;
};

AlgebraElem random_algebra_elem(int ngens, const Field* F, std::mt19937_64& rng);
GfMat eval_algebra_elem(const Rep& R, const AlgebraElem& z);

// composition factors (with repetition), via the meataxe
std::vector<Rep> chop(const Rep& R, std::mt19937_64& rng);
// certify irreducibility of a single module
bool is_irreducible(const Rep& R, std::mt19937_64& rng);

// invertible S with A(g) S = S B(g) for all generators, or nullopt
std::optional<GfMat> iso_witness(const Rep& A, const Rep& B, std::mt19937_64& rng);
bool is_isomorphic(const Rep& A, const Rep& B, std::mt19937_64& rng);
// basis of Hom_G(A, B) = { S : A(g) S = S B(g) } as matrices
std::vector<GfMat> hom_space(const Rep& A, const Rep& B);
int hom_dim(const Rep& A, const Rep& B);

/// Clifford decomposition of V restricted to a normal subgroup: V↓N is
/// semisimple, e(W_1 ⊕ ... ⊕ W_n) with the W_i a single G-orbit.
struct RestrictionDecomposition {
    int e = 0;
    std::vector<Rep> factors;  // pairwise non-isomorphic N-simples
};

RestrictionDecomposition restriction_decomposition(const Rep& V,
                                                   const PermGroup& N,
                                                   std::mt19937_64& rng);

// all irreducible 2-modular representations of G over the splitting field F
// (F = Field::for_modulus(odd part of exp G)); deterministic under seed
std::vector<Rep> simples(const PermGroup& G, const Field* F, std::uint64_t seed);

// multiplicity of simple S in the semisimple module M (= dim Hom(S, M))
int multiplicity_in(const Rep& S, const Rep& M);

}  // namespace char2
