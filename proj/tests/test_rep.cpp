#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "char2/corpus.hpp"
#include "char2/rep.hpp"

using namespace char2;

namespace {

// exhaustive composition-factor dimensions via 1-space spins (dim <= 6)
std::multiset<int> brute_factor_dims(const Rep& R) {
    if (R.dim == 0) return {};
    // minimal submodule: smallest spin of a nonzero vector
    std::uint64_t q = R.F->order();
    std::uint64_t total = 1;
    for (int i = 0; i < R.dim; ++i) total *= q;
    int best = R.dim + 1;
    GfMat best_basis;
    for (std::uint64_t code = 1; code < total; ++code) {
        GfMat v(R.F, 1, R.dim);
        std::uint64_t c = code;
        for (int j = 0; j < R.dim; ++j) {
            v.set(0, j, c % q);
            c /= q;
        }
        EchelonBasis s = spin(R, v);
        if (s.size() < best) {
            best = s.size();
            best_basis = s.basis();
        }
        if (best == 1) break;
    }
    std::multiset<int> out{best};
    if (best < R.dim) {
        auto rest = brute_factor_dims(quotient_rep(R, best_basis));
        out.insert(rest.begin(), rest.end());
    }
    return out;
}

std::multiset<int> chop_dims(const Rep& R, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::multiset<int> out;
    for (auto& f : chop(R, rng)) out.insert(f.dim);
    return out;
}

}  // namespace

TEST_CASE("permutation and regular modules") {
    Field F4 = Field::for_modulus(3);
    PermGroup s3 = corpus_group("S3");
    CHECK(perm_rep(s3, &F4).dim == 3);
    PermGroup c3 = corpus_group("C3");
    CHECK(regular_rep(c3, &F4).dim == 3);
    PermGroup a4 = corpus_group("A4");
    CHECK(regular_rep(a4, &F4).dim == 12);
    CHECK(perm_rep(s3, &F4).is_homomorphism());
    CHECK(regular_rep(a4, &F4).is_homomorphism());
}

TEST_CASE("chop: S3 permutation module") {
    PermGroup s3 = corpus_group("S3");
    Field F2 = Field::for_modulus(1);
    std::multiset<int> want{1, 2};
    CHECK(chop_dims(perm_rep(s3, &F2), 1) == want);
    Field F4 = Field::for_modulus(3);
    CHECK(chop_dims(perm_rep(s3, &F4), 1) == want);
    // seed independence of the factor multiset
    CHECK(chop_dims(perm_rep(s3, &F4), 2) == want);
    CHECK(chop_dims(perm_rep(s3, &F4), 3) == want);
}

TEST_CASE("chop: trivial module and regular A4 over GF(4)") {
    PermGroup c3 = corpus_group("C3");
    Field F4 = Field::for_modulus(3);
    Rep t = trivial_rep(c3, &F4);
    std::mt19937_64 rng(1);
    auto f = chop(t, rng);
    REQUIRE(f.size() == 1);
    CHECK(f[0].dim == 1);

    PermGroup a4 = corpus_group("A4");
    Rep reg = regular_rep(a4, &F4);
    auto factors = chop(reg, rng);
    CHECK(factors.size() == 12);
    for (auto& x : factors) CHECK(x.dim == 1);
    // three isomorphism classes, multiplicity 4 each
    std::vector<Rep> classes;
    std::vector<int> mult;
    for (auto& x : factors) {
        bool hit = false;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (is_isomorphic(x, classes[i], rng)) {
                ++mult[i];
                hit = true;
                break;
            }
        if (!hit) {
            classes.push_back(std::move(x));
            mult.push_back(1);
        }
    }
    CHECK(classes.size() == 3);
    for (int m : mult) CHECK(m == 4);
}

TEST_CASE("brute-force lattice oracle agrees with chop") {
    std::mt19937_64 rng(7);
    Field F2 = Field::for_modulus(1);
    Field F4 = Field::for_modulus(3);
    PermGroup s3 = corpus_group("S3");
    PermGroup s4 = corpus_group("S4");
    PermGroup d8 = corpus_group("D8");
    PermGroup a4 = corpus_group("A4");
    std::vector<Rep> cases;
    cases.push_back(perm_rep(s3, &F2));
    cases.push_back(perm_rep(s3, &F4));
    cases.push_back(perm_rep(s4, &F4));
    cases.push_back(perm_rep(d8, &F2));
    cases.push_back(perm_rep(a4, &F4));
    cases.push_back(tensor_rep(perm_rep(s3, &F4), perm_rep(s3, &F4)));  // dim 9? no: 3*3
    for (auto& R : cases) {
        if (R.dim > 6) continue;
        CAPTURE(R.dim);
        CHECK(brute_factor_dims(R) == chop_dims(R, 11));
    }
}

TEST_CASE("isomorphism testing") {
    Field F4 = Field::for_modulus(3);
    PermGroup c3 = corpus_group("C3");
    std::mt19937_64 rng(5);
    // the two nontrivial characters of C3 over GF(4)
    FElem u = F4.unity_root();
    Rep omega{&F4, &c3, 1, {}};
    omega.gens.push_back(GfMat::identity(&F4, 1).scaled(u));
    Rep omega2{&F4, &c3, 1, {}};
    omega2.gens.push_back(GfMat::identity(&F4, 1).scaled(F4.mul(u, u)));
    CHECK(is_isomorphic(omega, omega, rng));
    CHECK(!is_isomorphic(omega, omega2, rng));
    CHECK(is_isomorphic(dual_rep(omega), omega2, rng));
    CHECK(is_isomorphic(tensor_rep(omega, omega2), trivial_rep(c3, &F4), rng));

    PermGroup s3 = corpus_group("S3");
    auto s3s = simples(s3, &F4, 1);
    REQUIRE(s3s.size() == 2);
    CHECK(s3s[0].dim == 1);
    CHECK(s3s[1].dim == 2);
    CHECK(is_isomorphic(dual_rep(s3s[1]), s3s[1], rng));
    // witness property: A(g) S = S B(g), S invertible
    Rep two = s3s[1];
    Rep twod = dual_rep(two);
    auto S = iso_witness(twod, two, rng);
    REQUIRE(S.has_value());
    CHECK(S->rank() == 2);
    for (std::size_t gi = 0; gi < two.gens.size(); ++gi)
        CHECK(twod.gens[gi] * *S == *S * two.gens[gi]);
}

TEST_CASE("conjugate module by a transposition inverts omega") {
    Field F4 = Field::for_modulus(3);
    PermGroup s3 = corpus_group("S3");
    PermGroup c3 = s3.subgroup({{1, 2, 0}}, "C3");
    FElem u = F4.unity_root();
    Rep omega{&F4, &c3, 1, {}};
    omega.gens.push_back(GfMat::identity(&F4, 1).scaled(u));
    Rep omega2{&F4, &c3, 1, {}};
    omega2.gens.push_back(GfMat::identity(&F4, 1).scaled(F4.mul(u, u)));
    std::mt19937_64 rng(3);
    Rep conj = conjugate_rep(omega, Perm{1, 0, 2});
    CHECK(is_isomorphic(conj, omega2, rng));
}

TEST_CASE("induction") {
    Field F4 = Field::for_modulus(3);
    PermGroup s3 = corpus_group("S3");
    PermGroup c3 = s3.subgroup({{1, 2, 0}}, "C3");
    Rep ind = induce_rep(trivial_rep(c3, &F4), s3);
    CHECK(ind.dim == 2);
    std::multiset<int> want{1, 1};
    CHECK(chop_dims(ind, 1) == want);
    std::mt19937_64 rng(9);
    for (auto& f : chop(ind, rng)) CHECK(is_isomorphic(f, trivial_rep(s3, &F4), rng));
    // dual commutes with induction up to isomorphism
    FElem u = F4.unity_root();
    Rep omega{&F4, &c3, 1, {}};
    omega.gens.push_back(GfMat::identity(&F4, 1).scaled(u));
    Rep a = dual_rep(induce_rep(omega, s3));
    Rep b = induce_rep(dual_rep(omega), s3);
    CHECK(a.is_homomorphism());
    CHECK(is_isomorphic(a, b, rng));
    // induced module of the regular rep of C3 is the regular rep of S3
    Rep rr = induce_rep(regular_rep(c3, &F4), s3);
    CHECK(rr.dim == 6);
    CHECK(rr.is_homomorphism());
}

TEST_CASE("hom spaces") {
    Field F4 = Field::for_modulus(3);
    PermGroup c3 = corpus_group("C3");
    PermGroup s3 = corpus_group("S3");
    CHECK(hom_dim(trivial_rep(c3, &F4), trivial_rep(c3, &F4)) == 1);
    FElem u = F4.unity_root();
    Rep omega{&F4, &c3, 1, {}};
    omega.gens.push_back(GfMat::identity(&F4, 1).scaled(u));
    CHECK(hom_dim(omega, regular_rep(c3, &F4)) == 1);
    auto s3s = simples(s3, &F4, 1);
    Rep two = s3s[1];
    GfMat big2 = two.gens[0].kron(GfMat::identity(&F4, 2));
    Rep twotwo{&F4, &s3, 4, {}};
    for (auto& g : two.gens)
        twotwo.gens.push_back(GfMat::identity(&F4, 2).kron(g));
    CHECK(hom_dim(two, twotwo) == 2);
    // hom_dim(M, N) = hom_dim(dual N, dual M)
    Rep p = perm_rep(s3, &F4);
    CHECK(hom_dim(two, p) == hom_dim(dual_rep(p), dual_rep(two)));
    // intertwiner basis actually intertwines
    for (auto& S : hom_space(two, p))
        for (std::size_t gi = 0; gi < two.gens.size(); ++gi)
            CHECK(two.gens[gi] * S == S * p.gens[gi]);
}

TEST_CASE("restriction decomposition (Clifford)") {
    Field F4 = Field::for_modulus(3);
    PermGroup s3 = corpus_group("S3");
    PermGroup c3 = s3.subgroup({{1, 2, 0}}, "C3");
    std::mt19937_64 rng(2);
    auto s3s = simples(s3, &F4, 1);
    auto rd = restriction_decomposition(s3s[1], c3, rng);
    CHECK(rd.e == 1);
    REQUIRE(rd.factors.size() == 2);
    CHECK(rd.factors[0].dim == 1);
    CHECK(!is_isomorphic(rd.factors[0], rd.factors[1], rng));
    // the factors form one G-orbit: conjugating by a transposition swaps them
    Rep c = conjugate_rep(rd.factors[0], Perm{1, 0, 2});
    CHECK(is_isomorphic(c, rd.factors[1], rng));
    // trivial module restricts trivially
    auto rt = restriction_decomposition(trivial_rep(s3, &F4), c3, rng);
    CHECK(rt.e == 1);
    CHECK(rt.factors.size() == 1);

    // 2-dim simple of S4 restricted to A4 over its splitting field
    PermGroup s4 = corpus_group("S4");
    PermGroup a4 = s4.subgroup(corpus_group("A4").generators(), "A4");
    auto s4s = simples(s4, &F4, 1);
    REQUIRE(s4s.size() == 2);
    CHECK(s4s[1].dim == 2);
    auto r4 = restriction_decomposition(s4s[1], a4, rng);
    CHECK(r4.e == 1);
    CHECK(r4.factors.size() == 2);
    int esum = 0;
    for (auto& w : r4.factors) esum += w.dim;
    CHECK(r4.e * esum == 2);
}

TEST_CASE("simples counts match 2-regular class counts") {
    std::mt19937_64 rng(4);
    for (const std::string name :
         {"C3", "C7", "S3", "S4", "A4", "D8", "Q8", "SD16", "SL(2,3)", "C7:C3",
          "C5:C4", "S3xC3", "S3xS3"}) {
        CAPTURE(name);
        PermGroup g = corpus_group(name);
        auto [e2, modd] = two_part(static_cast<std::int64_t>(g.exponent()));
        Field F = Field::for_modulus(static_cast<std::uint64_t>(modd));
        auto s = simples(g, &F, 1);
        CHECK(s.size() == g.regular_classes().size());
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                CHECK(!is_isomorphic(s[i], s[j], rng));
        for (auto& r : s) CHECK(is_irreducible(r, rng));
    }
}

TEST_CASE("simples of A5 over GF(16)") {
    PermGroup a5 = corpus_group("A5");
    Field F = Field::for_modulus(15);
    auto s = simples(a5, &F, 1);
    std::multiset<int> dims;
    for (auto& r : s) dims.insert(r.dim);
    std::multiset<int> want{1, 2, 2, 4};
    CHECK(dims == want);
}

TEST_CASE("sub and quotient representations are homomorphisms") {
    Field F4 = Field::for_modulus(3);
    PermGroup s4 = corpus_group("S4");
    Rep p = perm_rep(s4, &F4);
    // all-ones vector spans an invariant line
    GfMat ones(&F4, 1, 4);
    for (int j = 0; j < 4; ++j) ones.set(0, j, 1);
    EchelonBasis s = spin(p, ones);
    CHECK(s.size() == 1);
    Rep sub = sub_rep(p, s.basis());
    Rep quot = quotient_rep(p, s.basis());
    CHECK(sub.dim == 1);
    CHECK(quot.dim == 3);
    CHECK(sub.is_homomorphism());
    CHECK(quot.is_homomorphism());
    std::mt19937_64 rng(8);
    CHECK(is_isomorphic(sub, trivial_rep(s4, &F4), rng));
}
