#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace char2 {

/// Permutation on {0..n-1} as an image vector.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& a, const Perm& b);  // apply a, then b
Perm perm_inv(const Perm& a);
int perm_order(const Perm& a);
bool perm_valid(const Perm& a);

struct PermHash {
    std::size_t operator()(const Perm& p) const;
};

struct ConjClass {
    int rep;                    // element index of the least representative
    std::vector<int> members;   // sorted element indices
    int element_order;
    std::uint64_t size;
    std::uint64_t centralizer_order;
    int defect;                 // ord_2 of centralizer_order
    bool is_2regular;           // odd element order
};

/// Finite permutation group with full element enumeration (desk scale;
/// configurable cap).  Elements are indexed in BFS order from the identity,
/// so index 0 is always the identity and every element carries a generator
/// word through bfs_link.
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int degree, std::vector<Perm> gens, std::string name = "",
              std::size_t cap = 1000000);

    // group file format: `degree n`, then one generator per line as cycles
    // `(1 2)(3 4)` or image list `[2,1,3,4]` (1-based); `#` comments
    static PermGroup load(const std::string& text, std::string name = "",
                          std::size_t cap = 1000000);
    static PermGroup load_file(const std::string& path, std::string name = "",
                               std::size_t cap = 1000000);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    std::uint64_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const Perm& element(int i) const { return elements_[i]; }
    int index_of(const Perm& p) const;  // -1 when absent
    bool contains(const Perm& p) const { return index_of(p) >= 0; }

    int mul(int a, int b) const;        // index of element(a) then element(b)
    int inverse(int a) const;
    int conjugate(int g, int x) const;  // index of x^-1 g x
    // (parent index, generator index) with element = parent * gen; (-1,-1) at id
    std::pair<int, int> bfs_link(int i) const { return links_[i]; }

    std::uint64_t exponent() const;
    const std::vector<ConjClass>& classes() const;
    int num_classes() const { return static_cast<int>(classes().size()); }
    int class_of(int elem) const;
    int class_inverse(int c) const;
    bool class_is_real(int c) const { return class_inverse(c) == c; }
    std::vector<int> regular_classes() const;  // 2-regular class indices

    // subgroup handling; subgroups live on the same point set
    bool has_subgroup(const PermGroup& H) const;
    bool is_normal(const PermGroup& H) const;
    PermGroup subgroup(std::vector<Perm> gens, std::string name = "") const;
    // smallest normal subgroup containing the seed elements
    PermGroup normal_closure(const std::vector<Perm>& seed) const;
    // normal closure of H inside the subgroup L of this group
    static PermGroup normal_closure_in(const PermGroup& L, const PermGroup& H);
    // every normal subgroup (joins of class closures); sorted by order
    std::vector<PermGroup> normal_subgroups() const;

    // left coset representatives gT, identity first, BFS order
    std::vector<Perm> coset_transversal(const PermGroup& T) const;

    std::uint64_t structure_hash() const;  // of degree + generators

private:
    int degree_ = 0;
    std::vector<Perm> gens_;
    std::string name_;
    std::vector<Perm> elements_;
    std::vector<std::pair<int, int>> links_;
    std::unordered_map<Perm, int, PermHash> index_;

    mutable std::vector<ConjClass> classes_;
    mutable std::vector<int> class_of_;
    mutable std::vector<int> class_inv_;
    void ensure_classes() const;
};

/// Quotient G/N as a permutation group on the left cosets of N, with the
/// data needed to push ambient elements through the epimorphism.
struct QuotientMap {
    PermGroup group;              // G/N acting on coset points
    std::vector<Perm> coset_reps;  // transversal aligned with points
    std::vector<int> point_of;     // G element index -> coset point

    Perm image(const PermGroup& G, const Perm& g) const;
};

QuotientMap make_quotient(const PermGroup& G, const PermGroup& N);

// chain H = K_0 ◁ K_1 ◁ ... ◁ K_r = G by iterated normal closures; returns
// {K_1,...,K_r} (empty when H = G).  Throws when H is not subnormal.
std::vector<PermGroup> subnormal_chain(const PermGroup& G, const PermGroup& H);

// G-classes contained in normal N that are both real in G and 2-regular
std::vector<int> real_2regular_classes_in(const PermGroup& G,
                                          const PermGroup& N);

struct ClassOrbit {
    std::vector<int> members;  // N-class indices
    bool real;                 // union is a real G-class
};

// orbits of G (by conjugation) on the conjugacy classes of normal N
std::vector<ClassOrbit> g_orbits_on_subgroup_classes(const PermGroup& G,
                                                     const PermGroup& N);

}  // namespace char2
