#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "char2/brc.hpp"
#include "char2/clf.hpp"

namespace char2 {

/// Centre of FG in the class-sum basis.  Elements are 1 x num_classes row
/// vectors of coefficients; T[i] is the matrix of right multiplication by
/// the i-th class sum, so v * T[i] is the coefficient vector of v·C_i+.
struct Center {
    const Field* F = nullptr;
    const PermGroup* G = nullptr;
    std::vector<GfMat> T;

    Center(const PermGroup& G, const Field* F);

    int dim() const { return static_cast<int>(T.size()); }
    GfMat one() const;                     // the identity element
    GfMat mult_op(const GfMat& a) const;   // matrix of multiplication by a
    GfMat mul(const GfMat& a, const GfMat& b) const;
    bool is_idempotent(const GfMat& a) const;
};

// complete orthogonal set of primitive idempotents of Z(FG), found by
// iteratively splitting along the minimal polynomials of the class-sum
// multiplication operators; Σ e_B = 1 and pairwise products vanish
// (asserted).  Deterministic: the sweep order is the class order and the
// seed only feeds the polynomial-factorization fallback.
std::vector<GfMat> block_idempotents(const Center& Z, std::uint64_t seed = 1);

// ω_B(C+) for every class: the unique scalar such that (C+ − ω)e_B is
// nilpotent on the ideal Z(FG)e_B; throws when an eigenvalue fails to lie
// in F (a finding — F is a splitting field)
std::vector<FElem> central_characters(const Center& Z, const GfMat& e);

struct BlockData {
    GfMat idempotent;                      // β(e_B, C) over classes
    std::vector<FElem> omega;              // ω_B(C+) per class
    int defect = 0;                        // d(B)
    std::vector<int> simples;              // indices into Blocks::simples
    std::vector<std::string> simple_labels;
    bool is_principal = false;
    int contragredient = -1;               // index of B^o
    std::string contragredient_label;
    std::string label;                     // "B0", "B1", ... in found order
};

/// Complete 2-block data of a group: idempotents, central characters,
/// defects, simple membership and contragredients, all cross-checked.
struct Blocks {
    Center Z;
    std::vector<Rep> simples;
    std::vector<BlockData> blocks;
    std::vector<int> block_of;  // block index per simple
    int principal = -1;
};

// `mods` are the irreducible FG-modules (any labeling; kept in order).
// Defects are computed from ω-support and cross-checked against the
// β-support; contragredients via class inversion and via duals of member
// simples; mismatches throw (findings).
Blocks compute_blocks(const PermGroup& G, const Field* F,
                      std::vector<Rep> mods, std::mt19937_64& rng,
                      std::uint64_t seed = 1);

// the unique block whose idempotent acts as the identity on M (all others
// act as zero, asserted)
int assign_block(const Blocks& B, const Rep& M);

// transport of a class-coefficient vector of N along conjugation by g
// (g normalizes N); used for the G-action on N-blocks
GfMat conjugate_center_vec(const PermGroup& N, const Perm& g, const GfMat& v);

// G-orbit id per N-block under conjugation (N = *BN.Z.G normal in G)
std::vector<int> block_orbits(const Blocks& BN, const PermGroup& G);

struct CoveringRecord {
    int block_of_G;
    int block_of_N;
    bool covers;
    bool weakly_regular;  // covers with maximal defect among coverers
};

/// Covering data for a pair N ◁ G: e_b^G per N-block b (as a G-class
/// vector), the covering matrix, and the weakly regular coverers.
struct Covering {
    std::vector<GfMat> induced;                    // e_b^G per N-block
    std::vector<CoveringRecord> records;           // all (B, b) pairs
    std::vector<std::vector<int>> coverers;        // G-blocks covering b
    std::vector<std::vector<int>> weakly_regular;  // max-defect coverers
    std::vector<int> orbit;                        // G-orbit id per N-block
};

// covering via ω_B(e_b^G) = 1, cross-checked against the idempotent
// identity e_B·e_b^G = e_B and against restriction of member simples;
// disagreement throws (a finding)
Covering covering(const Blocks& BG, const Blocks& BN, std::mt19937_64& rng);

// block covering: odd weakly-regular-coverer counts, real coverers iff
// b ~_G b^o, uniqueness for real b, and the classwise β/ω identity
VerifyReport verify_T4(const PermGroup& G, const PermGroup& N, const Field* F,
                       std::uint64_t seed);
// per block, an odd number of height-0 Brauer characters θ with
// Φ_θ(1)_2 = |G|_2, plus the residue identity dim(B)/(|G||G:D|) ≡ 1
VerifyReport verify_odd_height0(const PermGroup& G, const Field* F,
                                std::uint64_t seed);
// (θ(C+)/θ(1))* = ω_B(C+) for every height-0 θ and 2-regular class
VerifyReport verify_central_theta(const PermGroup& G, const Field* F,
                                  std::uint64_t seed);
// every non-quadratic self-dual simple lies in the principal block
VerifyReport verify_principal_block_lemma(const PermGroup& G, const Field* F,
                                          std::uint64_t seed);

}  // namespace char2
