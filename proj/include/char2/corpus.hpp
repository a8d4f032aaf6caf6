#pragma once

#include <string>
#include <vector>

#include "char2/perm.hpp"

namespace char2 {

/// One built-in example: a group plus its proper nontrivial normal subgroups
/// (auto-enumerated for |G| <= 400, hand-listed beyond).
struct CorpusEntry {
    std::string name;
    PermGroup group;
    std::vector<PermGroup> normal_subgroups;  // proper, nontrivial
};

// default corpus names, in suite order
std::vector<std::string> corpus_names();
// extended additions (Müller p=5,7); the M22 stretch entry is separate
std::vector<std::string> corpus_extended_names();

// look up any built-in group by name (corpus, extended, "M22")
PermGroup corpus_group(const std::string& name);
CorpusEntry corpus_entry(const std::string& name);

/// Müller's example: G = E ⋊ ZS for E = GF(p^2) additive, Z the scalars and
/// S a Sylow 2-subgroup of GL(E); H = Fe_2 ⋊ <t> dihedral of order 2p.
struct MullerExample {
    PermGroup G;
    PermGroup H;
    int p;
    int s;  // |ZS : Z x <t>|; 2s is the 2-part of p^2 - 1
};

MullerExample muller_family(int p);

}  // namespace char2
