#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "char2/cyclo.hpp"
#include "char2/rep.hpp"

namespace char2 {

/// Brauer character of a module: exact values in Q(ζ_m) on the 2-regular
/// classes of the group, in regular_classes() order.
struct BrauerCharacter {
    std::string module_label;
    int degree = 0;
    std::vector<Cyclo> values;
};

// value vector via eigenvalue multiplicities: at g of odd order o the
// eigenvalues of ρ(g) are powers of w = u^(m/o), and the value is
// Σ_j dim ker(ρ(g) − w^j) · ζ_m^((m/o)j)
BrauerCharacter brauer_character(const Rep& M, const CycloField& K);

/// The ℓ×ℓ table of irreducible Brauer characters with its exact inverse.
/// The CycloField must outlive the table.
struct BrauerTable {
    std::vector<int> classes;  // 2-regular class indices of G
    std::vector<BrauerCharacter> rows;
    CycloMat table;
    CycloMat inverse;

    BrauerTable(const CycloField* K, int l)
        : table(K, l, l), inverse(K, l, l) {}
};

// sorts `simples` into the canonical order (degree, then value vector
// lexicographically) and assigns stable labels "1a", "2a", "2b", ...
BrauerTable brauer_table(const PermGroup& G, const Field* F,
                         const CycloField* K, std::vector<Rep>& simples);

// Φ_u(1) = |G| · inverse[identity class][u]; throws when some entry fails
// to be a positive integer divisible by |G|_2 (a finding)
std::vector<mpz_class> pim_degrees(const BrauerTable& bt, const PermGroup& G);

struct SelfDualPartition {
    std::vector<int> self_dual;               // indices into simples
    std::vector<std::pair<int, int>> pairs;   // dual pairs, i < j
};

SelfDualPartition self_dual_partition(const std::vector<Rep>& simples,
                                      std::mt19937_64& rng);

struct DetSquared {
    bool ok = false;
    int sign = 0;         // det² = sign · product
    mpz_class product;    // Π |C_G(g_j)|_{2'} over 2-regular classes
};

DetSquared det_squared_check(const BrauerTable& bt, const PermGroup& G);

// Σ θ(1)² over the simples = codimension of rad(FG); always odd
int radical_codimension(const std::vector<Rep>& simples);
// rank of FG → ⊕ End(M_i), i.e. |G| − dim of the joint annihilator
int radical_codimension_oracle(const std::vector<Rep>& simples);

}  // namespace char2
