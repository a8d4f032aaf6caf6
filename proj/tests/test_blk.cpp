#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "char2/blk.hpp"
#include "char2/corpus.hpp"

using namespace char2;

namespace {

Field field_for(const PermGroup& G) {
    auto [e2, modd] = two_part(static_cast<std::int64_t>(G.exponent()));
    return Field::for_modulus(static_cast<std::uint64_t>(modd));
}

Blocks blocks_of(const PermGroup& G, const Field* F) {
    std::mt19937_64 rng(1);
    return compute_blocks(G, F, simples(G, F, 1), rng, 1);
}

}  // namespace

TEST_CASE("centre arithmetic: identity, commutativity, multiplicativity") {
    for (const std::string name : {"S3", "S4", "A4", "Q8", "C7:C3"}) {
        CAPTURE(name);
        PermGroup G = corpus_group(name);
        Field F = field_for(G);
        Center Z(G, &F);
        GfMat one = Z.one();
        // the identity class sum is the unit of the centre
        for (int i = 0; i < Z.dim(); ++i) {
            GfMat ei(&F, 1, Z.dim());
            ei.set(0, i, 1);
            CHECK(Z.mul(one, ei) == ei);
            for (int j = i; j < Z.dim(); ++j) {
                GfMat ej(&F, 1, Z.dim());
                ej.set(0, j, 1);
                CHECK(Z.mul(ei, ej) == Z.mul(ej, ei));
            }
        }
    }
}

TEST_CASE("block counts: FC3 splits fully, S3 has 2, 2-groups have 1") {
    {
        PermGroup c3 = corpus_group("C3");
        Field F = field_for(c3);  // GF(4)
        Center Z(c3, &F);
        CHECK(block_idempotents(Z).size() == 3);
    }
    {
        PermGroup s3 = corpus_group("S3");
        Field F = field_for(s3);
        Center Z(s3, &F);
        CHECK(block_idempotents(Z).size() == 2);
    }
    for (const std::string name : {"D8", "Q8", "SD16"}) {
        CAPTURE(name);
        PermGroup G = corpus_group(name);
        Field F = field_for(G);
        Center Z(G, &F);
        std::vector<GfMat> es = block_idempotents(Z);
        REQUIRE(es.size() == 1);
        CHECK(es[0] == Z.one());
    }
}

TEST_CASE("S3 block structure: membership, defects, Cartan split") {
    PermGroup G = corpus_group("S3");
    Field F = field_for(G);
    Blocks B = blocks_of(G, &F);
    REQUIRE(B.blocks.size() == 2);
    REQUIRE(B.simples.size() == 2);
    int triv = B.simples[0].dim == 1 ? 0 : 1;
    int two = 1 - triv;
    // principal block holds exactly the trivial simple, the defect-0 block
    // exactly the 2-dim one
    CHECK(B.block_of[triv] == B.principal);
    CHECK(B.block_of[two] != B.principal);
    CHECK(B.blocks[B.principal].simples.size() == 1);
    CHECK(B.blocks[B.block_of[two]].simples.size() == 1);
    CHECK(B.blocks[B.principal].defect == 1);
    CHECK(B.blocks[B.block_of[two]].defect == 0);
    // both blocks are real
    for (const BlockData& bd : B.blocks)
        CHECK(B.blocks[bd.contragredient].label == bd.label);
    // assign_block on fresh copies
    CHECK(assign_block(B, trivial_rep(G, &F)) == B.principal);
    CHECK(assign_block(B, B.simples[two]) == B.block_of[two]);
}

TEST_CASE("principal block: omega is the class size parity, defect v2|G|") {
    for (const std::string name :
         {"C3", "S3", "S4", "A4", "A5", "D8", "Q8", "SD16", "SL(2,3)",
          "C7:C3", "C5:C4", "S3xC3", "S3xS3"}) {
        CAPTURE(name);
        PermGroup G = corpus_group(name);
        Field F = field_for(G);
        Blocks B = blocks_of(G, &F);
        const BlockData& p = B.blocks[B.principal];
        CHECK(p.is_principal);
        auto [g2, godd] = two_part(static_cast<std::int64_t>(G.order()));
        int v2 = 0;
        while ((1ull << v2) < g2) ++v2;
        CHECK(p.defect == v2);
        for (int c = 0; c < B.Z.dim(); ++c)
            CHECK(p.omega[c] == (G.classes()[c].size % 2));
        // contragredient is an involution pairing ω-conjugate blocks
        for (const BlockData& bd : B.blocks)
            CHECK(B.blocks[bd.contragredient].contragredient_label == bd.label);
    }
}

TEST_CASE("C3 over GF(4): contragredient swaps the two nontrivial blocks") {
    PermGroup G = corpus_group("C3");
    Field F = field_for(G);
    Blocks B = blocks_of(G, &F);
    REQUIRE(B.blocks.size() == 3);
    int swapped = 0;
    for (std::size_t b = 0; b < B.blocks.size(); ++b) {
        if (static_cast<int>(b) == B.principal)
            CHECK(B.blocks[b].contragredient == static_cast<int>(b));
        else if (B.blocks[b].contragredient != static_cast<int>(b))
            ++swapped;
    }
    CHECK(swapped == 2);
}

TEST_CASE("central characters are multiplicative on class-sum products") {
    for (const std::string name : {"S3", "S4", "A4", "Q8", "SL(2,3)", "A5"}) {
        CAPTURE(name);
        PermGroup G = corpus_group(name);
        if (G.order() > 200) continue;
        Field F = field_for(G);
        Blocks B = blocks_of(G, &F);
        for (const BlockData& bd : B.blocks)
            for (int i = 0; i < B.Z.dim(); ++i)
                for (int j = 0; j < B.Z.dim(); ++j) {
                    // C_i+ C_j+ expanded along the structure constants
                    FElem lhs = 0;
                    for (int k = 0; k < B.Z.dim(); ++k)
                        lhs ^= F.mul(B.Z.T[j].get(i, k), bd.omega[k]);
                    CHECK(lhs == F.mul(bd.omega[i], bd.omega[j]));
                }
    }
}

TEST_CASE("covering: (S3, C3) and (S4, A4)") {
    std::mt19937_64 rng(1);
    {
        PermGroup G = corpus_group("S3");
        Field F = field_for(G);
        PermGroup N;
        for (PermGroup& H : G.normal_subgroups())
            if (H.order() == 3) N = std::move(H);
        REQUIRE(N.order() == 3);
        Blocks BG = blocks_of(G, &F);
        Blocks BN = blocks_of(N, &F);
        Covering cov = covering(BG, BN, rng);
        REQUIRE(BN.blocks.size() == 3);
        int nonpr = BG.principal == 0 ? 1 : 0;
        for (std::size_t b = 0; b < BN.blocks.size(); ++b) {
            REQUIRE(cov.coverers[b].size() == 1);
            if (static_cast<int>(b) == BN.principal)
                CHECK(cov.coverers[b][0] == BG.principal);
            else
                CHECK(cov.coverers[b][0] == nonpr);
            CHECK(cov.weakly_regular[b] == cov.coverers[b]);
        }
        // the two nontrivial C3-blocks form one G-orbit
        std::vector<int> nontriv;
        for (std::size_t b = 0; b < BN.blocks.size(); ++b)
            if (static_cast<int>(b) != BN.principal)
                nontriv.push_back(cov.orbit[b]);
        REQUIRE(nontriv.size() == 2);
        CHECK(nontriv[0] == nontriv[1]);
    }
    {
        PermGroup G = corpus_group("S4");
        Field F = field_for(G);
        PermGroup N;
        for (PermGroup& H : G.normal_subgroups())
            if (H.order() == 12) N = std::move(H);
        REQUIRE(N.order() == 12);  // A4
        Blocks BG = blocks_of(G, &F);
        Blocks BN = blocks_of(N, &F);
        REQUIRE(BG.blocks.size() == 1);  // S4 has only the principal block
        REQUIRE(BN.blocks.size() == 1);  // so does A4
        Covering cov = covering(BG, BN, rng);
        CHECK(cov.coverers[0] == std::vector<int>{BG.principal});
    }
}

TEST_CASE("theorem on block covering over corpus pairs") {
    struct Pair {
        std::string g;
        std::uint64_t norder;
    };
    for (const Pair& pr : {Pair{"S3", 3}, Pair{"S4", 4}, Pair{"S4", 12},
                           Pair{"A4", 4}, Pair{"S3xC3", 3}, Pair{"S3xC3", 6},
                           Pair{"S3xC3", 9}, Pair{"SL(2,3)", 8},
                           Pair{"C7:C3", 7}, Pair{"C5:C4", 5}}) {
        CAPTURE(pr.g);
        CAPTURE(pr.norder);
        PermGroup G = corpus_group(pr.g);
        Field F = field_for(G);
        PermGroup N;
        for (PermGroup& H : G.normal_subgroups())
            if (H.order() == pr.norder) N = std::move(H);
        REQUIRE(N.order() == pr.norder);
        VerifyReport rep = verify_T4(G, N, &F, 1);
        CAPTURE(rep.findings.empty() ? "" : rep.findings[0]);
        CHECK(rep.ok);
    }
    // G = G: every real block is its own unique coverer
    PermGroup G = corpus_group("SL(2,3)");
    Field F = field_for(G);
    VerifyReport rep = verify_T4(G, G, &F, 1);
    CHECK(rep.ok);
}

TEST_CASE("odd height-0 counts and the residue identity") {
    for (const std::string name :
         {"C3", "C7", "S3", "S4", "A4", "A5", "D8", "Q8", "SD16", "SL(2,3)",
          "C7:C3", "C5:C4", "S3xC3", "S3xS3", "A6", "S6"}) {
        CAPTURE(name);
        PermGroup G = corpus_group(name);
        Field F = field_for(G);
        VerifyReport rep = verify_odd_height0(G, &F, 1);
        CAPTURE(rep.findings.empty() ? "" : rep.findings[0]);
        CHECK(rep.ok);
    }
    // S3 fixture: defects (1, 0), one height-0 character per block
    PermGroup s3 = corpus_group("S3");
    Field F = field_for(s3);
    VerifyReport rep = verify_odd_height0(s3, &F, 1);
    REQUIRE(rep.ok);
    bool saw_d1 = false, saw_d0 = false;
    for (const std::string& w : rep.witnesses) {
        saw_d1 = saw_d1 || w.find("(defect 1): 1 height-0") != std::string::npos;
        saw_d0 = saw_d0 || w.find("(defect 0): 1 height-0") != std::string::npos;
    }
    CHECK(saw_d1);
    CHECK(saw_d0);
}

TEST_CASE("central character residues of height-0 Brauer characters") {
    for (const std::string name :
         {"C3", "S3", "S4", "A4", "A5", "D8", "SL(2,3)", "C7:C3", "S3xC3"}) {
        CAPTURE(name);
        PermGroup G = corpus_group(name);
        Field F = field_for(G);
        VerifyReport rep = verify_central_theta(G, &F, 1);
        CAPTURE(rep.findings.empty() ? "" : rep.findings[0]);
        CHECK(rep.ok);
    }
}

TEST_CASE("non-quadratic self-dual simples lie in the principal block") {
    {
        PermGroup G = corpus_group("S6");
        Field F = field_for(G);
        VerifyReport rep = verify_principal_block_lemma(G, &F, 1);
        CHECK(rep.ok);
        bool saw = false;
        for (const std::string& w : rep.witnesses)
            saw = saw || w.find("non-quadratic dim 4") != std::string::npos;
        CHECK(saw);
    }
    for (const std::string name : {"S3", "S4", "D8", "Q8", "A5"}) {
        CAPTURE(name);
        PermGroup G = corpus_group(name);
        Field F = field_for(G);
        VerifyReport rep = verify_principal_block_lemma(G, &F, 1);
        CHECK(rep.ok);
    }
}
