#include "char2/blk.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace char2 {

namespace {

GfPoly poly_scaled(const GfPoly& a, FElem c) {
    const Field* F = a.F;
    std::vector<FElem> out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = F->mul(a.c[i], c);
    return GfPoly(F, std::move(out));
}

// inverse of a modulo m (coprime, m nonconstant), by extended Euclid
GfPoly poly_invmod(const GfPoly& a, const GfPoly& m) {
    const Field* F = a.F;
    GfPoly r0 = m, r1 = poly_rem(a, m);
    GfPoly u0 = GfPoly::zero(F), u1 = GfPoly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = r1;
        r1 = r;
        GfPoly u2 = poly_add(u0, poly_mul(q, u1));
        u0 = u1;
        u1 = u2;
    }
    if (r0.degree() != 0) throw std::logic_error("poly_invmod: not coprime");
    return poly_rem(poly_scaled(u0, F->inv(r0.c[0])), m);
}

GfPoly poly_pow(const GfPoly& p, int e) {
    GfPoly r = GfPoly::one(p.F);
    for (int i = 0; i < e; ++i) r = poly_mul(r, p);
    return r;
}

int v2_u64(std::uint64_t n) {
    return std::countr_zero(two_part(static_cast<std::int64_t>(n)).first);
}

// Σ_{x ∈ C} ρ(x) for a class of *M.G
GfMat class_sum_action(const Rep& M, const ConjClass& cc) {
    GfMat A(M.F, M.dim, M.dim);
    for (int x : cc.members) A.add_assign(M.at(x));
    return A;
}

}  // namespace

Center::Center(const PermGroup& G_, const Field* F_) : F(F_), G(&G_) {
    const auto& cls = G->classes();
    int nc = static_cast<int>(cls.size());
    T.assign(nc, GfMat(F, nc, nc));
    std::vector<std::uint8_t> par(static_cast<std::size_t>(nc) * nc);
    for (int k = 0; k < nc; ++k) {
        std::fill(par.begin(), par.end(), 0);
        int zk = cls[k].rep;
        // coefficient of C_k in C_j+ C_i+ counts x ∈ C_j with x⁻¹z_k ∈ C_i
        for (std::size_t e = 0; e < G->order(); ++e) {
            int j = G->class_of(static_cast<int>(e));
            int i = G->class_of(G->mul(G->inverse(static_cast<int>(e)), zk));
            par[static_cast<std::size_t>(j) * nc + i] ^= 1;
        }
        for (int j = 0; j < nc; ++j)
            for (int i = 0; i < nc; ++i)
                if (par[static_cast<std::size_t>(j) * nc + i])
                    T[i].set(j, k, 1);
    }
}

GfMat Center::one() const {
    GfMat v(F, 1, dim());
    v.set(0, G->class_of(0), 1);
    return v;
}

GfMat Center::mult_op(const GfMat& a) const {
    GfMat M(F, dim(), dim());
    for (int i = 0; i < dim(); ++i) {
        FElem c = a.get(0, i);
        if (c) M.add_assign(T[i].scaled(c));
    }
    return M;
}

GfMat Center::mul(const GfMat& a, const GfMat& b) const {
    GfMat r(F, 1, dim());
    for (int i = 0; i < dim(); ++i) {
        FElem c = b.get(0, i);
        if (c) r.add_assign((a * T[i]).scaled(c));
    }
    return r;
}

bool Center::is_idempotent(const GfMat& a) const { return mul(a, a) == a; }

std::vector<GfMat> block_idempotents(const Center& Z, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Field* F = Z.F;
    std::vector<GfMat> idems = {Z.one()};
    for (int i = 0; i < Z.dim(); ++i) {
        GfPoly f = min_poly(Z.T[i]);
        auto facs = poly_factor(f, rng);
        if (facs.size() < 2) continue;
        // powers of z = C_i+ as centre elements
        std::vector<GfMat> zpow = {Z.one()};
        for (int t = 1; t < f.degree(); ++t)
            zpow.push_back(zpow.back() * Z.T[i]);
        auto eval_at_z = [&](const GfPoly& p) {
            GfMat r(F, 1, Z.dim());
            for (std::size_t t = 0; t < p.c.size(); ++t)
                if (p.c[t]) r.add_assign(zpow[t].scaled(p.c[t]));
            return r;
        };
        // CRT idempotents of F[z] ≅ Π F[x]/q_j split every current piece
        std::vector<GfMat> next;
        std::vector<GfMat> Es;
        for (const PolyFactor& pf : facs) {
            GfPoly q = poly_pow(pf.factor, pf.multiplicity);
            GfPoly g = poly_divmod(f, q).first;
            GfPoly u = poly_invmod(g, q);
            Es.push_back(eval_at_z(poly_rem(poly_mul(u, g), f)));
        }
        for (const GfMat& e : idems)
            for (const GfMat& E : Es) {
                GfMat c = Z.mul(e, E);
                if (!c.is_zero()) next.push_back(std::move(c));
            }
        idems = std::move(next);
    }
    GfMat total(F, 1, Z.dim());
    for (const GfMat& e : idems) {
        if (!Z.is_idempotent(e))
            throw std::logic_error("block_idempotents: not idempotent");
        total.add_assign(e);
    }
    if (total != Z.one())
        throw std::logic_error("block_idempotents: idempotents do not sum to 1");
    for (std::size_t a = 0; a < idems.size(); ++a)
        for (std::size_t b = a + 1; b < idems.size(); ++b)
            if (!Z.mul(idems[a], idems[b]).is_zero())
                throw std::logic_error("block_idempotents: not orthogonal");
    return idems;
}

std::vector<FElem> central_characters(const Center& Z, const GfMat& e) {
    std::mt19937_64 rng(1);
    // basis of the ideal Z(FG)e from the rows C_j+ · e
    GfMat R = Z.mult_op(e);
    int r = static_cast<int>(R.rref().size());
    GfMat basis = R.submatrix(0, r, 0, Z.dim());
    std::vector<FElem> omega;
    for (int i = 0; i < Z.dim(); ++i) {
        auto X = (basis * Z.T[i]).solve_left(basis);
        if (!X) throw std::logic_error("central_characters: ideal not invariant");
        auto facs = poly_factor(min_poly(*X), rng);
        if (facs.size() != 1 || facs[0].factor.degree() != 1)
            throw std::logic_error(
                "central_characters: class sum not split on the block");
        omega.push_back(facs[0].factor.c[0]);  // root of the monic x + ω
    }
    // ω_B(e_B) = 1
    FElem at_e = 0;
    for (int i = 0; i < Z.dim(); ++i)
        at_e ^= Z.F->mul(e.get(0, i), omega[i]);
    if (at_e != 1) throw std::logic_error("central_characters: ω(e) != 1");
    return omega;
}

Blocks compute_blocks(const PermGroup& G, const Field* F,
                      std::vector<Rep> mods, std::mt19937_64& rng,
                      std::uint64_t seed) {
    (void)rng;
    Blocks out{Center(G, F), std::move(mods), {}, {}, -1};
    const auto& cls = G.classes();
    std::vector<GfMat> es = block_idempotents(out.Z, seed);

    // principal block first: its ω is the class-size parity
    for (std::size_t b = 0; b < es.size(); ++b) {
        std::vector<FElem> om = central_characters(out.Z, es[b]);
        bool principal = true;
        for (int c = 0; c < out.Z.dim(); ++c)
            principal = principal && om[c] == cls[c].size % 2;
        if (principal && b > 0) std::swap(es[0], es[b]);
    }
    for (std::size_t b = 0; b < es.size(); ++b) {
        BlockData bd;
        bd.idempotent = es[b];
        bd.omega = central_characters(out.Z, es[b]);
        bd.label = "B" + std::to_string(b);
        // defect: min class defect on the ω-support, max on the β-support
        int dmin = -1, dmax = -1;
        for (int c = 0; c < out.Z.dim(); ++c) {
            if (bd.omega[c] && (dmin < 0 || cls[c].defect < dmin))
                dmin = cls[c].defect;
            if (bd.idempotent.get(0, c) && cls[c].defect > dmax)
                dmax = cls[c].defect;
        }
        if (dmin != dmax)
            throw std::logic_error("compute_blocks: defect mismatch " +
                                   std::to_string(dmin) + " vs " +
                                   std::to_string(dmax));
        bd.defect = dmin;
        out.blocks.push_back(std::move(bd));
    }

    // membership: e_B acts as the identity on exactly one block's worth
    out.block_of.assign(out.simples.size(), -1);
    int trivial = -1;
    for (std::size_t t = 0; t < out.simples.size(); ++t) {
        const Rep& M = out.simples[t];
        std::vector<GfMat> csum;
        for (const ConjClass& cc : cls) csum.push_back(class_sum_action(M, cc));
        GfMat I = GfMat::identity(F, M.dim);
        for (std::size_t b = 0; b < out.blocks.size(); ++b) {
            GfMat A(F, M.dim, M.dim);
            for (int c = 0; c < out.Z.dim(); ++c) {
                FElem beta = out.blocks[b].idempotent.get(0, c);
                if (beta) A.add_assign(csum[c].scaled(beta));
            }
            if (A == I) {
                if (out.block_of[t] >= 0)
                    throw std::logic_error("compute_blocks: simple in 2 blocks");
                out.block_of[t] = static_cast<int>(b);
            } else if (!A.is_zero()) {
                throw std::logic_error("compute_blocks: e_B neither 0 nor 1");
            }
        }
        if (out.block_of[t] < 0)
            throw std::logic_error("compute_blocks: unassigned simple");
        // the centre acts on a block's simple by its central character
        const BlockData& bd = out.blocks[out.block_of[t]];
        for (int c = 0; c < out.Z.dim(); ++c)
            if (csum[c] != I.scaled(bd.omega[c]))
                throw std::logic_error("compute_blocks: ω vs module action");
        out.blocks[out.block_of[t]].simples.push_back(static_cast<int>(t));
        out.blocks[out.block_of[t]].simple_labels.push_back(M.label);
        bool is_triv = M.dim == 1;
        for (const GfMat& g : M.gens) is_triv = is_triv && g.get(0, 0) == 1;
        if (is_triv) trivial = static_cast<int>(t);
    }
    if (trivial < 0) throw std::logic_error("compute_blocks: no trivial simple");
    out.principal = out.block_of[trivial];
    out.blocks[out.principal].is_principal = true;

    // contragredient: transport β along class inversion, cross-check duals
    for (std::size_t b = 0; b < out.blocks.size(); ++b) {
        GfMat v(F, 1, out.Z.dim());
        for (int c = 0; c < out.Z.dim(); ++c)
            v.set(0, c, out.blocks[b].idempotent.get(0, G.class_inverse(c)));
        int bo = -1;
        for (std::size_t b2 = 0; b2 < out.blocks.size(); ++b2)
            if (out.blocks[b2].idempotent == v) bo = static_cast<int>(b2);
        if (bo < 0)
            throw std::logic_error("compute_blocks: contragredient missing");
        out.blocks[b].contragredient = bo;
        out.blocks[b].contragredient_label = out.blocks[bo].label;
        for (int t : out.blocks[b].simples)
            if (assign_block(out, dual_rep(out.simples[t])) != bo)
                throw std::logic_error(
                    "compute_blocks: contragredient vs dual simples");
    }
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        if (out.blocks[out.blocks[b].contragredient].contragredient !=
            static_cast<int>(b))
            throw std::logic_error("compute_blocks: B^oo != B");
    return out;
}

int assign_block(const Blocks& B, const Rep& M) {
    const Field* F = B.Z.F;
    const auto& cls = B.Z.G->classes();
    std::vector<GfMat> csum;
    for (const ConjClass& cc : cls) csum.push_back(class_sum_action(M, cc));
    GfMat I = GfMat::identity(F, M.dim);
    int found = -1;
    for (std::size_t b = 0; b < B.blocks.size(); ++b) {
        GfMat A(F, M.dim, M.dim);
        for (int c = 0; c < B.Z.dim(); ++c) {
            FElem beta = B.blocks[b].idempotent.get(0, c);
            if (beta) A.add_assign(csum[c].scaled(beta));
        }
        if (A == I) {
            if (found >= 0) throw std::logic_error("assign_block: not unique");
            found = static_cast<int>(b);
        } else if (!A.is_zero()) {
            throw std::logic_error("assign_block: e_B neither 0 nor 1");
        }
    }
    if (found < 0) throw std::logic_error("assign_block: no block");
    return found;
}

GfMat conjugate_center_vec(const PermGroup& N, const Perm& g, const GfMat& v) {
    GfMat w(v.field(), 1, v.cols());
    Perm gi = perm_inv(g);
    for (int c = 0; c < v.cols(); ++c) {
        const Perm& x = N.element(N.classes()[c].rep);
        int y = N.index_of(perm_mul(perm_mul(gi, x), g));
        if (y < 0)
            throw std::invalid_argument("conjugate_center_vec: g not normalizing");
        w.set(0, N.class_of(y), v.get(0, c));
    }
    return w;
}

std::vector<int> block_orbits(const Blocks& BN, const PermGroup& G) {
    const PermGroup& N = *BN.Z.G;
    std::vector<Perm> trans = G.coset_transversal(N);
    int nb = static_cast<int>(BN.blocks.size());
    std::vector<int> orbit(nb, -1);
    for (int b = 0; b < nb; ++b) {
        if (orbit[b] >= 0) continue;
        for (const Perm& g : trans) {
            GfMat w = conjugate_center_vec(N, g, BN.blocks[b].idempotent);
            for (int b2 = 0; b2 < nb; ++b2)
                if (BN.blocks[b2].idempotent == w) {
                    if (orbit[b2] >= 0 && orbit[b2] != b)
                        throw std::logic_error("block_orbits: inconsistent");
                    orbit[b2] = b;
                }
        }
    }
    return orbit;
}

Covering covering(const Blocks& BG, const Blocks& BN, std::mt19937_64& rng) {
    const PermGroup& G = *BG.Z.G;
    const PermGroup& N = *BN.Z.G;
    const Field* F = BG.Z.F;
    if (!G.is_normal(N)) throw std::invalid_argument("covering: N not normal");
    std::vector<Perm> trans = G.coset_transversal(N);
    const auto& gcls = G.classes();

    // N-blocks of the restriction factors of every G-simple
    std::vector<std::set<int>> below(BG.simples.size());
    for (std::size_t t = 0; t < BG.simples.size(); ++t) {
        RestrictionDecomposition rd =
            restriction_decomposition(BG.simples[t], N, rng);
        for (const Rep& W : rd.factors)
            below[t].insert(assign_block(BN, W));
    }

    Covering out;
    out.orbit = block_orbits(BN, G);
    for (std::size_t b = 0; b < BN.blocks.size(); ++b) {
        // e_b^G: sum of the distinct G-conjugates of e_b
        std::vector<GfMat> seen;
        GfMat sum(F, 1, BN.Z.dim());
        for (const Perm& g : trans) {
            GfMat w = conjugate_center_vec(N, g, BN.blocks[b].idempotent);
            if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
                sum.add_assign(w);
                seen.push_back(std::move(w));
            }
        }
        // rewrite over G-classes; coefficients are constant on each
        GfMat w(F, 1, BG.Z.dim());
        for (int C = 0; C < BG.Z.dim(); ++C) {
            int rep = N.index_of(G.element(gcls[C].rep));
            if (rep < 0) continue;  // class outside N: coefficient 0
            FElem coeff = sum.get(0, N.class_of(rep));
            for (int x : gcls[C].members) {
                int nx = N.index_of(G.element(x));
                if (sum.get(0, N.class_of(nx)) != coeff)
                    throw std::logic_error("covering: e_b^G not G-stable");
            }
            w.set(0, C, coeff);
        }
        out.coverers.emplace_back();
        for (std::size_t B = 0; B < BG.blocks.size(); ++B) {
            FElem om = 0;
            for (int C = 0; C < BG.Z.dim(); ++C)
                om ^= F->mul(w.get(0, C), BG.blocks[B].omega[C]);
            bool cov1 = om == 1;
            bool cov2 =
                BG.Z.mul(BG.blocks[B].idempotent, w) == BG.blocks[B].idempotent;
            bool cov3 = false;
            for (int t : BG.blocks[B].simples)
                cov3 = cov3 || below[t].count(static_cast<int>(b)) > 0;
            if (cov1 != cov2 || cov1 != cov3)
                throw std::logic_error("covering: criteria disagree at " +
                                       BG.blocks[B].label + "/" +
                                       BN.blocks[b].label);
            if (cov1) out.coverers.back().push_back(static_cast<int>(B));
        }
        if (out.coverers.back().empty())
            throw std::logic_error("covering: uncovered N-block");
        int dmax = -1;
        for (int B : out.coverers.back())
            dmax = std::max(dmax, BG.blocks[B].defect);
        out.weakly_regular.emplace_back();
        for (int B : out.coverers.back())
            if (BG.blocks[B].defect == dmax)
                out.weakly_regular.back().push_back(B);
        for (std::size_t B = 0; B < BG.blocks.size(); ++B) {
            const auto& cov = out.coverers.back();
            const auto& wr = out.weakly_regular.back();
            bool c = std::find(cov.begin(), cov.end(), static_cast<int>(B)) !=
                     cov.end();
            bool r = std::find(wr.begin(), wr.end(), static_cast<int>(B)) !=
                     wr.end();
            out.records.push_back(
                {static_cast<int>(B), static_cast<int>(b), c, r});
        }
        out.induced.push_back(std::move(w));
    }
    return out;
}

VerifyReport verify_T4(const PermGroup& G, const PermGroup& N, const Field* F,
                       std::uint64_t seed) {
    VerifyReport rep;
    rep.name = "T4:" + G.name() + "/" + N.name();
    std::mt19937_64 rng(seed);
    try {
        Blocks BG = compute_blocks(G, F, simples(G, F, seed), rng, seed);
        Blocks BN = compute_blocks(N, F, simples(N, F, seed), rng, seed);
        Covering cov = covering(BG, BN, rng);
        rep.note(std::to_string(BG.blocks.size()) + " G-blocks, " +
                 std::to_string(BN.blocks.size()) + " N-blocks");
        for (std::size_t b = 0; b < BN.blocks.size(); ++b) {
            const auto& wr = cov.weakly_regular[b];
            std::string tag = BN.blocks[b].label + ": ";
            rep.check(wr.size() % 2 == 1,
                      tag + std::to_string(wr.size()) + " weakly regular");
            int bo = BN.blocks[b].contragredient;
            bool conj_real = cov.orbit[b] == cov.orbit[bo];
            int real_wr = 0;
            for (int B : wr)
                if (BG.blocks[B].contragredient == B) ++real_wr;
            rep.check((real_wr > 0) == conj_real,
                      tag + "real coverer iff b ~ b^o (" +
                          std::to_string(real_wr) + " real)");
            if (bo == static_cast<int>(b))
                rep.check(real_wr == 1, tag + "unique real coverer");
            // β/ω identity on every class inside N
            bool id_ok = true;
            for (int B : wr)
                for (int C = 0; C < BG.Z.dim(); ++C) {
                    if (N.index_of(G.element(G.classes()[C].rep)) < 0) continue;
                    FElem lhs = F->mul(BG.blocks[B].idempotent.get(0, C),
                                       BG.blocks[B].omega[C]);
                    FElem om_b = 0;
                    for (int D = 0; D < BN.Z.dim(); ++D) {
                        int x = G.index_of(N.element(N.classes()[D].rep));
                        if (G.class_of(x) == C) om_b ^= BN.blocks[b].omega[D];
                    }
                    FElem rhs = F->mul(cov.induced[b].get(0, C), om_b);
                    id_ok = id_ok && lhs == rhs;
                }
            rep.check(id_ok, tag + "β/ω identity classwise");
        }
    } catch (const std::logic_error& e) {
        rep.finding(e.what());
    }
    return rep;
}

VerifyReport verify_odd_height0(const PermGroup& G, const Field* F,
                                std::uint64_t seed) {
    VerifyReport rep;
    rep.name = "odd_height0:" + G.name();
    std::mt19937_64 rng(seed);
    try {
        CycloField K(F->modulus());
        std::vector<Rep> mods = simples(G, F, seed);
        BrauerTable bt = brauer_table(G, F, &K, mods);
        std::vector<mpz_class> phi = pim_degrees(bt, G);
        Blocks B = compute_blocks(G, F, std::move(mods), rng, seed);
        TwoAdicChannel ch(&K, F);
        int v2G = v2_u64(G.order());
        for (const BlockData& bd : B.blocks) {
            int count = 0;
            mpq_class total = 0;
            mpq_class denom = mpq_class(G.order()) *
                              (mpz_class(static_cast<unsigned long>(G.order())) >>
                               bd.defect);
            for (int t : bd.simples) {
                int deg = B.simples[t].dim;
                long v2th = std::countr_zero(
                    two_part(static_cast<std::int64_t>(deg)).first);
                long v2ph = static_cast<long>(mpz_scan1(phi[t].get_mpz_t(), 0));
                if (v2th == v2G - bd.defect && v2ph == v2G) ++count;
                mpq_class term = mpq_class(phi[t] * deg) / denom;
                term.canonicalize();
                total += term;
            }
            rep.check(count % 2 == 1,
                      bd.label + " (defect " + std::to_string(bd.defect) +
                          "): " + std::to_string(count) +
                          " height-0 θ with full Φ-part");
            auto red = ch.reduce_rational(total);
            if (!red)
                rep.finding(bd.label + ": dim(B)/(|G||G:D|) not 2-integral");
            else
                rep.check(*red == 1, bd.label + ": residue identity = 1");
        }
    } catch (const std::logic_error& e) {
        rep.finding(e.what());
    }
    return rep;
}

VerifyReport verify_central_theta(const PermGroup& G, const Field* F,
                                  std::uint64_t seed) {
    VerifyReport rep;
    rep.name = "central_theta:" + G.name();
    std::mt19937_64 rng(seed);
    try {
        CycloField K(F->modulus());
        std::vector<Rep> mods = simples(G, F, seed);
        BrauerTable bt = brauer_table(G, F, &K, mods);
        Blocks B = compute_blocks(G, F, std::move(mods), rng, seed);
        TwoAdicChannel ch(&K, F);
        int v2G = v2_u64(G.order());
        int checked = 0;
        for (std::size_t t = 0; t < B.simples.size(); ++t) {
            const BlockData& bd = B.blocks[B.block_of[t]];
            int deg = B.simples[t].dim;
            if (std::countr_zero(
                    two_part(static_cast<std::int64_t>(deg)).first) !=
                v2G - bd.defect)
                continue;  // not height 0
            for (std::size_t j = 0; j < bt.classes.size(); ++j) {
                int C = bt.classes[j];
                mpq_class s(static_cast<unsigned long>(G.classes()[C].size),
                            static_cast<unsigned long>(deg));
                s.canonicalize();
                Cyclo y = K.scale(bt.rows[t].values[j], s);
                auto red = ch.reduce(y);
                if (!red) {
                    rep.finding(bt.rows[t].module_label + " at class " +
                                std::to_string(C) + ": not 2-integral");
                    continue;
                }
                if (*red != bd.omega[C]) {
                    rep.finding(bt.rows[t].module_label + " at class " +
                                std::to_string(C) + ": residue != ω");
                    continue;
                }
                ++checked;
            }
        }
        rep.check(checked > 0, std::to_string(checked) +
                                   " (θ, class) residues matched ω");
    } catch (const std::logic_error& e) {
        rep.finding(e.what());
    }
    return rep;
}

VerifyReport verify_principal_block_lemma(const PermGroup& G, const Field* F,
                                          std::uint64_t seed) {
    VerifyReport rep;
    rep.name = "principal_block:" + G.name();
    std::mt19937_64 rng(seed);
    try {
        Blocks B = compute_blocks(G, F, simples(G, F, seed), rng, seed);
        int nonquad = 0;
        for (std::size_t t = 0; t < B.simples.size(); ++t) {
            const Rep& M = B.simples[t];
            if (M.dim == 1) continue;
            if (!is_isomorphic(M, dual_rep(M), rng)) continue;
            if (quadratic_type(M, rng)) continue;
            ++nonquad;
            rep.check(B.block_of[t] == B.principal,
                      "non-quadratic dim " + std::to_string(M.dim) +
                          " lies in the principal block");
        }
        if (nonquad == 0) rep.note("vacuous: all self-dual simples quadratic");
    } catch (const std::logic_error& e) {
        rep.finding(e.what());
    }
    return rep;
}

}  // namespace char2
