#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "char2/frm.hpp"

namespace char2 {

/// Stabilizer T = { g : W^g ≅ W } and extended stabilizer
/// T* = { g : W^g ≅ W or W^g ≅ W* } of an irreducible N-module in G.
struct StabilizerData {
    PermGroup T;
    PermGroup Tstar;
    int index_flag = 1;  // |T* : T|, always 1 or 2
};

StabilizerData stabilizer(const Rep& W, const PermGroup& G,
                          std::mt19937_64& rng);

/// Working data of the self-dual extension algorithm, indexed by the
/// elements of T in BFS order.  Y carries projective intertwiners with
/// Y(gh) = α(g,h) Y(g) Y(h); the form scales by B^g = λ(g) B with
/// λ(gh) = α(g,h)² λ(g) λ(h); μ² = λ; ε is the B-scaling of Ŷ = μ⁻¹Y,
/// a homomorphism of odd order d; δ = ε^((d+1)/2) satisfies δ² = ε; and
/// Xhat = δ⁻¹Ŷ is the unique self-dual extension of W to T.
struct ExtensionScaffold {
    std::vector<GfMat> Y;
    std::vector<FElem> lambda;
    std::vector<FElem> mu;
    std::vector<FElem> epsilon;
    std::vector<FElem> delta;
    GfMat B;   // the fixed invariant alternating form on W
    Rep Xhat;  // references the caller's T
};

// W a self-dual irreducible N-module, T ≥ N with W T-invariant; every
// internal identity is asserted and a violation throws (a finding)
ExtensionScaffold extension_scaffold(const Rep& W, const PermGroup& T,
                                     std::mt19937_64& rng);
// the unique self-dual extension of W to T (certified against the
// linear-character twists); the result references the caller's T
Rep canonical_selfdual_extension(const Rep& W, const PermGroup& T,
                                 std::mt19937_64& rng);

// the canonical self-dual irreducible G-module lying over W; when gsimples
// is supplied, uniqueness of the odd restriction multiplicity is certified
// against the full list
Rep canonical_module(const Rep& W, const PermGroup& G, std::mt19937_64& rng,
                     const std::vector<Rep>* gsimples = nullptr,
                     std::uint64_t seed = 1);

// multiplicity of the N-simple W in V↓N (N normal, so the restriction is
// semisimple and the multiplicity is the constant e of the decomposition)
int clifford_multiplicity(const Rep& V, const PermGroup& N, const Rep& W,
                          std::mt19937_64& rng);

// is W G-conjugate to its dual (witnessed over a transversal of N in G)
bool conjugate_to_dual(const Rep& W, const PermGroup& G, std::mt19937_64& rng);

/// Hyperbolic form witnessing quadratic type for the self-dual simple lying
/// over a non-self-dual W with |T*:T| = 2.  `module` is X↑G in the induced
/// basis, isomorphic to V; Q lives on that basis.
struct HyperbolicWitness {
    Rep module;
    QuadForm Q;
};

HyperbolicWitness hyperbolic_witness(const Rep& W, const StabilizerData& sd,
                                     const Rep& V, const PermGroup& G,
                                     std::mt19937_64& rng);

/// Outcome of one theorem verification over a pair of groups.  A failed
/// check is a mathematical finding, recorded rather than thrown.
struct VerifyReport {
    std::string name;
    bool ok = true;
    std::vector<std::string> witnesses;
    std::vector<std::string> findings;

    void note(const std::string& s) { witnesses.push_back(s); }
    void finding(const std::string& s) {
        ok = false;
        findings.push_back(s);
    }
    void check(bool cond, const std::string& s) {
        if (cond)
            note(s);
        else
            finding(s + " [VIOLATED]");
    }
};

// every simple W of N has a self-dual G-simple restricting with odd
// multiplicity iff W is G-conjugate to its dual; also the orbit count
// against the real 2-regular G-classes in N
VerifyReport verify_T1(const PermGroup& G, const PermGroup& N, const Field* F,
                       std::uint64_t seed);
// every self-dual simple of N extends to its stabilizer with a unique
// self-dual extension, and the canonical module is the unique self-dual
// G-simple with odd restriction multiplicity, that multiplicity being 1
VerifyReport verify_T2(const PermGroup& G, const PermGroup& N, const Field* F,
                       std::uint64_t seed);
// every non-quadratic self-dual G-simple on which N acts nontrivially
// restricts to N with multiplicity 1 as a sum of non-quadratic self-dual
// simples
VerifyReport verify_T3(const PermGroup& G, const PermGroup& N, const Field* F,
                       std::uint64_t seed);
// all nontrivial self-dual simples of G are quadratic iff the same holds
// for N and for G/N
VerifyReport verify_quadratic_criterion(const PermGroup& G,
                                        const PermGroup& N, const Field* F,
                                        std::uint64_t seed);
// |G:N| odd: induction-restriction is a bijection between self-dual
// G-simples and G-orbits of self-dual N-simples
VerifyReport verify_cor_odd_quotient(const PermGroup& G, const PermGroup& N,
                                     const Field* F, std::uint64_t seed);
// H subnormal: each self-dual H-simple has exactly one self-dual G-simple
// restricting with odd multiplicity
VerifyReport verify_cor_subnormal(const PermGroup& G, const PermGroup& H,
                                  const Field* F, std::uint64_t seed);

}  // namespace char2
