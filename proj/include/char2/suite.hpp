#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "char2/blk.hpp"
#include "char2/corpus.hpp"

namespace char2 {

// the splitting field GF(2^k) for k = ord_2 of the odd part of exp G
Field splitting_field(const PermGroup& G);

// Fong's Lemma over the simples: every nontrivial self-dual simple has even
// dimension and a certified nondegenerate invariant alternating form
VerifyReport verify_fong(const PermGroup& G, const Field* F,
                         std::uint64_t seed);
// Σ θ(1)² is odd; matches the annihilator-rank oracle for |G| ≤ 100
VerifyReport verify_radical(const PermGroup& G, const Field* F,
                            std::uint64_t seed);

/// All verifier verdicts for one corpus entry (the group-level checks plus
/// every theorem over each of its proper nontrivial normal subgroups).
struct SuiteResult {
    std::string entry;
    std::vector<VerifyReport> reports;
    bool ok() const;
};

SuiteResult run_entry(const std::string& name, std::uint64_t seed);
// entries run concurrently up to `workers`; results in corpus order
std::vector<SuiteResult> run_suite(const std::vector<std::string>& names,
                                   std::uint64_t seed, int workers);

// M22: the two nontrivial self-dual simples have degrees 34 and 98, the
// product of the two 10-dim Brauer characters is 2·1 + the 98, and both
// self-dual modules are non-quadratic.  Runs within `budget_seconds`;
// exceeding the budget yields a report marked skipped (not a finding).
VerifyReport m22_stretch(int budget_seconds, std::uint64_t seed);

}  // namespace char2
