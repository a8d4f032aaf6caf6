#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "char2/cyclo.hpp"
#include "char2/field.hpp"
#include "char2/gfmat.hpp"
#include "char2/gfpoly.hpp"

using namespace char2;

TEST_CASE("two_part splits powers of two") {
    CHECK(two_part(12) == std::make_pair(std::uint64_t(4), std::int64_t(3)));
    CHECK(two_part(7) == std::make_pair(std::uint64_t(1), std::int64_t(7)));
    CHECK(two_part(64) == std::make_pair(std::uint64_t(64), std::int64_t(1)));
    CHECK_THROWS(two_part(0));
}

TEST_CASE("ord2_mod") {
    CHECK(ord2_mod(1) == 1);
    CHECK(ord2_mod(3) == 2);
    CHECK(ord2_mod(7) == 3);
    CHECK(ord2_mod(15) == 4);
    CHECK(ord2_mod(1155) == 60);
}

TEST_CASE("field construction for small moduli") {
    Field f1 = Field::for_modulus(1);
    CHECK(f1.k() == 1);
    CHECK(f1.unity_root() == 1);

    Field f3 = Field::for_modulus(3);
    CHECK(f3.k() == 2);
    CHECK(f3.elem_order(f3.unity_root()) == 3);

    Field f7 = Field::for_modulus(7);
    CHECK(f7.k() == 3);
    CHECK(f7.elem_order(f7.unity_root()) == 7);
    CHECK(f7.elem_order(f7.gamma()) == 7);

    Field f15 = Field::for_modulus(15);
    CHECK(f15.k() == 4);
    CHECK(f15.elem_order(f15.unity_root()) == 15);
    CHECK(f15.elem_order(f15.gamma()) == 15);

    Field f21 = Field::for_modulus(21);
    CHECK(f21.k() == 6);
    CHECK(f21.elem_order(f21.unity_root()) == 21);
}

TEST_CASE("field arithmetic laws") {
    Field F = Field::for_modulus(15);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        FElem a = rng() & 15, b = rng() & 15, c = rng() & 15;
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        CHECK(F.mul(a, b) == F.mul(b, a));
        if (a) CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.mul(F.sqrt(a), F.sqrt(a)) == a);
        CHECK(F.sqrt(F.sqr(a)) == a);
    }
    // frobenius fixes exactly GF(2)
    int fixed = 0;
    for (FElem a = 0; a < 16; ++a)
        if (F.sqr(a) == a) ++fixed;
    CHECK(fixed == 2);
}

TEST_CASE("field for large modulus m=1155") {
    Field F = Field::for_modulus(1155);  // k = 60, the M22 field
    CHECK(F.k() == 60);
    CHECK(F.elem_order(F.unity_root()) == 1155);
    FElem x = 0x123456789abcdeULL;
    CHECK(F.mul(F.sqrt(x), F.sqrt(x)) == x);
    CHECK(F.mul(x, F.inv(x)) == 1);
}

TEST_CASE("matrix rref, rank, inverse, nullspace") {
    Field F = Field::for_modulus(7);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        int n = 1 + static_cast<int>(rng() % 8);
        int m = 1 + static_cast<int>(rng() % 8);
        GfMat A(&F, n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) A.set(i, j, rng() & 7);
        int r = A.rank();
        GfMat K = A.kernel();
        CHECK(K.rows() == n - r);
        if (K.rows() > 0) CHECK((K * A).is_zero());
        GfMat N = A.right_nullspace();
        CHECK(N.rows() == m - r);
        if (N.rows() > 0) CHECK((A * N.transposed()).is_zero());
        CHECK(K.rank() == K.rows());
    }
    for (int t = 0; t < 10; ++t) {
        int n = 1 + static_cast<int>(rng() % 8);
        GfMat A(&F, n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) A.set(i, j, rng() & 7);
        } while (A.rank() < n);
        CHECK(A * A.inverse() == GfMat::identity(&F, n));
        CHECK(A.inverse() * A == GfMat::identity(&F, n));
    }
}

TEST_CASE("matrix product against schoolbook") {
    Field F = Field::for_modulus(21);
    std::mt19937_64 rng(3);
    GfMat A(&F, 5, 7), B(&F, 7, 4);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 7; ++j) A.set(i, j, rng() & 63);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 4; ++j) B.set(i, j, rng() & 63);
    GfMat C = A * B;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 4; ++j) {
            FElem s = 0;
            for (int l = 0; l < 7; ++l) s ^= F.mul(A.get(i, l), B.get(l, j));
            CHECK(C.get(i, j) == s);
        }
    CHECK((A * B).transposed() == B.transposed() * A.transposed());
}

TEST_CASE("kron dimensions and mixed product") {
    Field F = Field::for_modulus(3);
    std::mt19937_64 rng(4);
    GfMat A(&F, 2, 3), B(&F, 3, 2), C(&F, 2, 2), D(&F, 2, 3);
    for (auto* M : {&A, &D})
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) M->set(i, j, rng() & 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) B.set(i, j, rng() & 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) C.set(i, j, rng() & 3);
    // (A kron C)(B kron D) = AB kron CD
    CHECK(A.kron(C) * B.kron(D) == (A * B).kron(C * D));
}

TEST_CASE("polynomial factorization") {
    Field F = Field::for_modulus(3);  // GF(4)
    std::mt19937_64 rng(5);
    // x^4 - x splits into the 4 linear factors over GF(4)
    GfPoly f(&F, {0, 1, 0, 0, 1});  // x^4 + x
    auto fac = poly_factor(f, rng);
    CHECK(fac.size() == 4);
    for (auto& pf : fac) {
        CHECK(pf.factor.degree() == 1);
        CHECK(pf.multiplicity == 1);
    }
    // repeated and mixed-degree factors
    GfPoly x1(&F, {1, 1});
    GfPoly irr2(&F, {2, 1, 1});  // x^2 + x + w, irreducible over GF(4)
    CHECK(poly_eval(irr2, 0) != 0);
    GfPoly g = poly_mul(poly_mul(x1, x1), irr2);
    auto gf = poly_factor(g, rng);
    CHECK(gf.size() == 2);
    int found1 = 0, found2 = 0;
    for (auto& pf : gf) {
        if (pf.factor == x1.monic()) { found1 = pf.multiplicity; }
        if (pf.factor == irr2.monic()) { found2 = pf.multiplicity; }
    }
    CHECK(found1 == 2);
    CHECK(found2 == 1);
    // product of factors with multiplicity reconstructs the input
    GfPoly prod = GfPoly::one(&F);
    for (auto& pf : gf)
        for (int i = 0; i < pf.multiplicity; ++i)
            prod = poly_mul(prod, pf.factor);
    CHECK(prod == g.monic());
}

TEST_CASE("random polynomial factor-and-multiply round trip") {
    Field F = Field::for_modulus(7);
    std::mt19937_64 rng(6);
    for (int t = 0; t < 15; ++t) {
        int d = 2 + static_cast<int>(rng() % 9);
        std::vector<FElem> c(d + 1);
        for (auto& v : c) v = rng() & 7;
        c[d] = 1;
        GfPoly f(&F, std::move(c));
        auto fac = poly_factor(f, rng);
        GfPoly prod = GfPoly::one(&F);
        int total = 0;
        for (auto& pf : fac) {
            total += pf.factor.degree() * pf.multiplicity;
            for (int i = 0; i < pf.multiplicity; ++i)
                prod = poly_mul(prod, pf.factor);
        }
        CHECK(total == d);
        CHECK(prod == f.monic());
    }
}

TEST_CASE("minimal polynomial") {
    Field F = Field::for_modulus(7);
    CHECK(min_poly(GfMat::identity(&F, 4)) == GfPoly(&F, {1, 1}));
    // companion matrix of f has minimal polynomial f (row convention:
    // e_i * A = e_{i+1}, e_{n-1} * A = low coefficients)
    GfPoly f(&F, {3, 5, 1, 1});
    int n = f.degree();
    GfMat A(&F, n, n);
    for (int i = 0; i + 1 < n; ++i) A.set(i, i + 1, 1);
    for (int j = 0; j < n; ++j) A.set(n - 1, j, f.c[j]);
    CHECK(min_poly(A) == f.monic());
    // block diagonal with a repeated companion block: min poly still f
    GfMat B(&F, 2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            B.set(i, j, A.get(i, j));
            B.set(n + i, n + j, A.get(i, j));
        }
    CHECK(min_poly(B) == f.monic());
    // min poly annihilates
    CHECK(poly_eval_mat(min_poly(A), A).is_zero());
}

TEST_CASE("cyclotomic polynomials and arithmetic") {
    CycloField K1(1);
    CHECK(K1.degree() == 1);
    CycloField K3(3);
    CHECK(K3.degree() == 2);
    CHECK(K3.cyclotomic_poly() == std::vector<mpz_class>{1, 1, 1});
    CycloField K7(7);
    CHECK(K7.degree() == 6);
    CycloField K12(12);
    CHECK(K12.degree() == 4);  // Phi_12 = x^4 - x^2 + 1
    CHECK(K12.cyclotomic_poly() == std::vector<mpz_class>{1, 0, -1, 0, 1});

    CycloField& K = K7;
    Cyclo z = K.zeta(1);
    Cyclo p = K.one();
    for (int i = 0; i < 7; ++i) p = K.mul(p, z);
    CHECK(p == K.one());
    // sum of all 7th roots of unity vanishes
    Cyclo s = K.zero();
    for (int t = 0; t < 7; ++t) s = K.add(s, K.zeta(t));
    CHECK(s.is_zero());
    // inverse and conjugation
    CHECK(K.mul(z, K.inv(z)) == K.one());
    CHECK(K.conj(z) == K.zeta(6));
    Cyclo a = K.add(K.zeta(2), K.scale(K.zeta(5), mpq_class(3, 2)));
    CHECK(K.mul(a, K.inv(a)) == K.one());
    CHECK(K.conj(K.conj(a)) == a);
    // z * conj(z) = 1 on roots of unity
    CHECK(K.mul(K.zeta(3), K.conj(K.zeta(3))) == K.one());
}

TEST_CASE("cyclotomic matrix inverse and determinant") {
    CycloField K(5);
    CycloMat A(&K, 3, 3);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            A.at(i, j) = K.add(K.zeta(rng() % 5),
                               K.from_int(static_cast<long>(rng() % 3)));
    Cyclo d = A.determinant();
    if (!d.is_zero()) {
        CycloMat Ainv = A.inverse();
        CycloMat P = A * Ainv;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(P.at(i, j) == (i == j ? K.one() : K.zero()));
    }
    // vandermonde of the three cube roots of unity in Q(zeta_15)... keep it
    // small: det of 2x2 with known value
    CycloMat B(&K, 2, 2);
    B.at(0, 0) = K.one();
    B.at(0, 1) = K.zeta(1);
    B.at(1, 0) = K.zeta(4);
    B.at(1, 1) = K.one();
    // det = 1 - zeta * zeta^4 = 1 - 1 = 0
    CHECK(B.determinant().is_zero());
}

TEST_CASE("two-adic channel: reduction and lifting") {
    for (std::uint64_t m : {1ULL, 3ULL, 7ULL, 15ULL, 21ULL}) {
        CycloField K(m);
        Field F = Field::for_modulus(m);
        TwoAdicChannel ch(&K, &F);
        // zeta^t reduces to u^t, and brauer_lift inverts it
        for (std::uint64_t t = 0; t < m; ++t) {
            auto r = ch.reduce(K.zeta(t));
            REQUIRE(r.has_value());
            CHECK(*r == F.pow(F.unity_root(), t));
            CHECK(ch.brauer_lift(F.pow(F.unity_root(), t)) == K.zeta(t));
        }
        // ring homomorphism on random integer combinations
        std::mt19937_64 rng(m);
        for (int t = 0; t < 10; ++t) {
            Cyclo a = K.add(K.zeta(rng() % m), K.from_int(rng() % 5));
            Cyclo b = K.sub(K.zeta(rng() % m), K.zeta(rng() % m));
            auto ra = ch.reduce(a), rb = ch.reduce(b);
            auto rab = ch.reduce(K.mul(a, b));
            auto rsum = ch.reduce(K.add(a, b));
            REQUIRE(ra.has_value());
            REQUIRE(rb.has_value());
            CHECK(*rab == F.mul(*ra, *rb));
            CHECK(*rsum == F.add(*ra, *rb));
        }
    }
}

TEST_CASE("cyclotomic: high zeta powers when m exceeds 2*phi(m)") {
    // m = 105: phi = 48, so powers above 94 need the extended table
    CycloField K(105);
    for (std::uint64_t t : {95ULL, 100ULL, 104ULL}) {
        CHECK(K.mul(K.zeta(t), K.zeta(105 - t)) == K.one());
        CHECK(K.mul(K.zeta(t), K.zeta(t)) == K.zeta((2 * t) % 105));
    }
}

TEST_CASE("two-adic channel: valuations") {
    CycloField K(7);
    Field F = Field::for_modulus(7);
    TwoAdicChannel ch(&K, &F);
    CHECK(ch.valuation(K.from_int(4)) == 2);
    CHECK(ch.valuation(K.from_int(3)) == 0);
    CHECK(ch.valuation(K.from_rational(mpq_class(1, 2))) == -1);
    CHECK(ch.valuation(K.from_rational(mpq_class(5, 24))) == -3);
    CHECK(!ch.valuation(K.zero()).has_value());
    // 1/2 is not 2-integral
    CHECK(!ch.reduce_rational(mpq_class(1, 2)).has_value());
    // 1/3 is; it reduces to the inverse of 3 mod 2, i.e. 1
    auto r = ch.reduce_rational(mpq_class(1, 3));
    REQUIRE(r.has_value());
    CHECK(*r == 1);
    // 1 - zeta has positive valuation at no prime above 2 (7 is odd), so
    // valuation 0, and 2 has valuation 1
    CHECK(ch.valuation(K.sub(K.one(), K.zeta(1))) == 0);
    CHECK(ch.valuation(K.from_int(2)) == 1);
    // reduce(zeta + 2*zeta^3) == u
    Cyclo y = K.add(K.zeta(1), K.scale(K.zeta(3), mpq_class(2)));
    CHECK(ch.reduce(y) == F.unity_root());
}

TEST_CASE("echelon basis spinning support") {
    Field F = Field::for_modulus(7);
    EchelonBasis eb(&F, 5);
    std::mt19937_64 rng(9);
    GfMat v1(&F, 1, 5), v2(&F, 1, 5);
    for (int j = 0; j < 5; ++j) {
        v1.set(0, j, rng() & 7);
        v2.set(0, j, rng() & 7);
    }
    CHECK(eb.insert(v1));
    CHECK(eb.insert(v2));
    GfMat comb = v1;
    comb.row_addmul_from(0, v2, 0, 5);
    CHECK(!eb.insert(comb));
    CHECK(eb.size() == 2);
    CHECK(eb.reduces_to_zero(comb));
    CHECK(eb.basis().rank() == 2);
}
