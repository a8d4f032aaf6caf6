#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "char2/brc.hpp"
#include "char2/corpus.hpp"

using namespace char2;

namespace {

FElem trace_of(const GfMat& A) {
    FElem t = 0;
    for (int i = 0; i < A.rows(); ++i) t ^= A.get(i, i);
    return t;
}

struct Ctx {
    PermGroup G;
    Field F;
    CycloField K;
    std::vector<Rep> mods;
};

Ctx make_ctx(const std::string& name) {
    PermGroup G = corpus_group(name);
    auto [e2, modd] = two_part(static_cast<std::int64_t>(G.exponent()));
    Field F = Field::for_modulus(static_cast<std::uint64_t>(modd));
    CycloField K(F.modulus());
    Ctx c{std::move(G), std::move(F), std::move(K), {}};
    c.mods = simples(c.G, &c.F, 1);
    return c;
}

}  // namespace

TEST_CASE("Brauer characters of C3 and S3") {
    Ctx c3 = make_ctx("C3");
    BrauerTable t3 = brauer_table(c3.G, &c3.F, &c3.K, c3.mods);
    REQUIRE(t3.rows.size() == 3);
    // row order: trivial first (rational values), then the dual pair
    CHECK(t3.rows[0].values[1] == c3.K.one());
    CHECK(t3.rows[0].values[2] == c3.K.one());
    CHECK(c3.mods[0].label == "1a");
    CHECK(c3.mods[2].label == "1c");
    // nontrivial rows take the two primitive cube roots at the generator class
    CHECK(t3.rows[1].values[1] != t3.rows[2].values[1]);
    for (int r : {1, 2}) {
        bool prim = t3.rows[r].values[1] == c3.K.zeta(1) ||
                    t3.rows[r].values[1] == c3.K.zeta(2);
        CHECK(prim);
    }

    Ctx s3 = make_ctx("S3");
    BrauerTable ts = brauer_table(s3.G, &s3.F, &s3.K, s3.mods);
    REQUIRE(ts.rows.size() == 2);
    CHECK(ts.rows[0].degree == 1);
    CHECK(ts.rows[1].degree == 2);
    // 2-dim value at a 3-cycle is zeta + zeta^2 = -1
    CHECK(ts.rows[1].values[1] == s3.K.from_int(-1));
    CHECK(s3.mods[1].label == "2a");
}

TEST_CASE("table times inverse is the identity, exactly") {
    for (const std::string name : {"C3", "S3", "S4", "A4", "A5", "Q8", "C7:C3"}) {
        CAPTURE(name);
        Ctx c = make_ctx(name);
        BrauerTable bt = brauer_table(c.G, &c.F, &c.K, c.mods);
        CycloMat P = bt.table * bt.inverse;
        for (int i = 0; i < P.rows(); ++i)
            for (int j = 0; j < P.cols(); ++j)
                CHECK(P.at(i, j) == (i == j ? c.K.one() : c.K.zero()));
    }
}

TEST_CASE("principal indecomposable degrees") {
    Ctx s3 = make_ctx("S3");
    BrauerTable bt = brauer_table(s3.G, &s3.F, &s3.K, s3.mods);
    auto phi = pim_degrees(bt, s3.G);
    REQUIRE(phi.size() == 2);
    CHECK(phi[0] == 2);
    CHECK(phi[1] == 2);

    Ctx s4 = make_ctx("S4");
    auto phi4 = pim_degrees(brauer_table(s4.G, &s4.F, &s4.K, s4.mods), s4.G);
    REQUIRE(phi4.size() == 2);
    CHECK(phi4[0] == 8);
    CHECK(phi4[1] == 8);

    // odd order: FG is semisimple, so PIMs are the simples themselves
    for (const std::string name : {"C3", "C7", "C7:C3"}) {
        CAPTURE(name);
        Ctx c = make_ctx(name);
        BrauerTable t = brauer_table(c.G, &c.F, &c.K, c.mods);
        auto p = pim_degrees(t, c.G);
        for (std::size_t i = 0; i < p.size(); ++i)
            CHECK(p[i] == c.mods[i].dim);
    }
}

TEST_CASE("dual values live on inverse classes; tensor and sum rules") {
    Ctx c = make_ctx("C7:C3");
    std::vector<int> reg = c.G.regular_classes();
    for (const Rep& M : c.mods) {
        BrauerCharacter a = brauer_character(M, c.K);
        BrauerCharacter b = brauer_character(dual_rep(M), c.K);
        for (std::size_t j = 0; j < reg.size(); ++j) {
            int cinv = c.G.class_inverse(reg[j]);
            auto it = std::find(reg.begin(), reg.end(), cinv);
            REQUIRE(it != reg.end());
            CHECK(b.values[j] == a.values[it - reg.begin()]);
            // inversion = complex conjugation on Brauer values
            CHECK(b.values[j] == c.K.conj(a.values[j]));
        }
    }

    Ctx s3 = make_ctx("S3");
    Rep two = s3.mods.back();
    if (two.dim != 2) two = s3.mods.front();
    REQUIRE(two.dim == 2);
    BrauerCharacter x = brauer_character(two, s3.K);
    BrauerCharacter tt = brauer_character(tensor_rep(two, two), s3.K);
    for (std::size_t j = 0; j < x.values.size(); ++j)
        CHECK(tt.values[j] == s3.K.mul(x.values[j], x.values[j]));
}

TEST_CASE("lift/trace compatibility through the 2-adic channel") {
    for (const std::string name : {"C3", "S3", "A4", "A5", "SL(2,3)"}) {
        CAPTURE(name);
        Ctx c = make_ctx(name);
        TwoAdicChannel ch(&c.K, &c.F);
        for (const Rep& M : c.mods) {
            BrauerCharacter bc = brauer_character(M, c.K);
            std::vector<int> reg = c.G.regular_classes();
            for (std::size_t j = 0; j < reg.size(); ++j) {
                auto red = ch.reduce(bc.values[j]);
                REQUIRE(red.has_value());
                CHECK(*red == trace_of(M.at(c.G.classes()[reg[j]].rep)));
            }
        }
    }
}

TEST_CASE("self-dual partition matches real 2-regular class counts") {
    std::mt19937_64 rng(2);
    for (const std::string name :
         {"C3", "C7", "S3", "S4", "A4", "A5", "D8", "Q8", "SD16", "SL(2,3)",
          "C7:C3", "C5:C4", "S3xC3", "S3xS3"}) {
        CAPTURE(name);
        Ctx c = make_ctx(name);
        SelfDualPartition p = self_dual_partition(c.mods, rng);
        std::size_t real2reg = 0;
        for (int cl : c.G.regular_classes())
            if (c.G.class_is_real(cl)) ++real2reg;
        CHECK(p.self_dual.size() == real2reg);
        CHECK(p.self_dual.size() + 2 * p.pairs.size() == c.mods.size());
    }
    // spot checks
    Ctx s3 = make_ctx("S3");
    CHECK(self_dual_partition(s3.mods, rng).pairs.empty());
    Ctx c3 = make_ctx("C3");
    auto pc3 = self_dual_partition(c3.mods, rng);
    CHECK(pc3.self_dual.size() == 1);
    CHECK(pc3.pairs.size() == 1);
    Ctx d8 = make_ctx("D8");
    CHECK(self_dual_partition(d8.mods, rng).self_dual.size() == 1);
}

TEST_CASE("squared determinant identity") {
    for (const std::string name : {"C3", "S3", "S4", "A4", "A5", "Q8", "S3xC3"}) {
        CAPTURE(name);
        Ctx c = make_ctx(name);
        BrauerTable bt = brauer_table(c.G, &c.F, &c.K, c.mods);
        DetSquared d = det_squared_check(bt, c.G);
        CHECK(d.ok);
        CHECK((d.sign == 1 || d.sign == -1));
    }
    Ctx s3 = make_ctx("S3");
    DetSquared d = det_squared_check(
        brauer_table(s3.G, &s3.F, &s3.K, s3.mods), s3.G);
    CHECK(d.product == 9);
    CHECK(d.sign == 1);
    Ctx c3 = make_ctx("C3");
    DetSquared d3 = det_squared_check(
        brauer_table(c3.G, &c3.F, &c3.K, c3.mods), c3.G);
    CHECK(d3.product == 27);
    CHECK(d3.sign == -1);
}

TEST_CASE("radical codimension is odd and matches the annihilator oracle") {
    for (const std::string name :
         {"C3", "C7", "S3", "S4", "A4", "A5", "D8", "Q8", "SD16", "SL(2,3)",
          "C7:C3", "C5:C4", "S3xC3", "S3xS3"}) {
        CAPTURE(name);
        Ctx c = make_ctx(name);
        int codim = radical_codimension(c.mods);
        CHECK(codim % 2 == 1);
        if (c.G.order() <= 100) CHECK(codim == radical_codimension_oracle(c.mods));
    }
    Ctx s3 = make_ctx("S3");
    CHECK(radical_codimension(s3.mods) == 5);
    Ctx a4 = make_ctx("A4");
    CHECK(radical_codimension(a4.mods) == 3);
    Ctx d8 = make_ctx("D8");
    CHECK(radical_codimension(d8.mods) == 1);
}
