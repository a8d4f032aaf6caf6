#include "char2/clf.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace char2 {

namespace {

bool rep_trivial(const Rep& R) {
    if (R.dim != 1) return false;
    GfMat id = GfMat::identity(R.F, 1);
    for (const auto& g : R.gens)
        if (!(g == id)) return false;
    return true;
}

bool rep_kernel_contains_all(const Rep& R) {
    GfMat id = GfMat::identity(R.F, R.dim);
    for (const auto& g : R.gens)
        if (!(g == id)) return false;
    return true;
}

bool self_dual(const Rep& R, std::mt19937_64& rng) {
    return is_isomorphic(R, dual_rep(R), rng);
}

// C = λB for the unique scalar λ, or throw
FElem form_scalar(const GfMat& C, const GfMat& B) {
    const Field* F = B.field();
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j)
            if (B.get(i, j)) {
                FElem lam = F->mul(C.get(i, j), F->inv(B.get(i, j)));
                if (!(C == B.scaled(lam)))
                    throw std::logic_error("form is not a scalar multiple");
                return lam;
            }
    throw std::logic_error("form_scalar: zero reference form");
}

// M = αP for the unique scalar α, or throw
FElem matrix_scalar(const GfMat& M, const GfMat& P) { return form_scalar(M, P); }

// partition simples of N into G-orbits under conjugation; returns orbit ids
std::vector<int> g_orbit_ids(const std::vector<Rep>& ns, const PermGroup& G,
                             const PermGroup& N, std::mt19937_64& rng) {
    std::vector<Perm> reps = G.coset_transversal(N);
    std::vector<int> orbit(ns.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (orbit[i] >= 0) continue;
        orbit[i] = next;
        for (const Perm& g : reps) {
            Rep c = conjugate_rep(ns[i], g);
            for (std::size_t j = 0; j < ns.size(); ++j)
                if (orbit[j] < 0 && is_isomorphic(c, ns[j], rng)) orbit[j] = next;
        }
        ++next;
    }
    return orbit;
}

std::string mstr(const std::string& a, std::uint64_t v) {
    return a + std::to_string(v);
}

}  // namespace

StabilizerData stabilizer(const Rep& W, const PermGroup& G,
                          std::mt19937_64& rng) {
    const PermGroup& N = *W.G;
    if (!G.is_normal(N)) throw std::invalid_argument("stabilizer: N not normal");
    Rep Wd = dual_rep(W);
    std::vector<Perm> tg = N.generators(), tsg = N.generators();
    for (const Perm& g : G.coset_transversal(N)) {
        Rep c = conjugate_rep(W, g);
        if (is_isomorphic(c, W, rng)) {
            tg.push_back(g);
            tsg.push_back(g);
        } else if (is_isomorphic(c, Wd, rng)) {
            tsg.push_back(g);
        }
    }
    StabilizerData sd{G.subgroup(tg, "T"), G.subgroup(tsg, "T*"), 1};
    sd.index_flag = static_cast<int>(sd.Tstar.order() / sd.T.order());
    if (sd.index_flag != 1 && sd.index_flag != 2)
        throw std::logic_error("stabilizer: |T*:T| not 1 or 2");
    return sd;
}

ExtensionScaffold extension_scaffold(const Rep& W, const PermGroup& T,
                                     std::mt19937_64& rng) {
    const PermGroup& N = *W.G;
    const Field* F = W.F;
    if (!T.has_subgroup(N) || !T.is_normal(N))
        throw std::invalid_argument("extension_scaffold: need N normal in T");
    if (!self_dual(W, rng))
        throw std::invalid_argument("extension_scaffold: W is not self-dual");

    int n = static_cast<int>(T.order());
    ExtensionScaffold sc;
    sc.Y.resize(n);
    sc.lambda.assign(n, 1);
    sc.mu.assign(n, 1);
    sc.epsilon.assign(n, 1);
    sc.delta.assign(n, 1);
    sc.Xhat = Rep{F, &T, W.dim, {}, ""};

    if (rep_trivial(W)) {
        sc.B = GfMat(F, 1, 1);
        for (int e = 0; e < n; ++e) sc.Y[e] = GfMat::identity(F, 1);
        sc.Xhat = trivial_rep(T, F);
        return sc;
    }

    sc.B = fong_form(W, rng);

    // projective intertwiners Y(g) X(m) = X^g(m) Y(g), with Y = X on N
    for (int e = 0; e < n; ++e) {
        const Perm& g = T.element(e);
        if (N.contains(g)) {
            sc.Y[e] = W.at(g);
        } else {
            auto hs = hom_space(conjugate_rep(W, g), W);
            if (hs.empty())
                throw std::invalid_argument("extension_scaffold: W not T-invariant");
            sc.Y[e] = hs[0];
            if (sc.Y[e].rank() != W.dim)
                throw std::logic_error("extension_scaffold: singular intertwiner");
        }
    }

    // B^g = λ(g)B; μ is the unique square root; Ŷ = μ⁻¹Y is scalar-free
    std::vector<GfMat> Yh(n), Xh(n);
    for (int e = 0; e < n; ++e) {
        sc.lambda[e] =
            form_scalar(sc.Y[e] * sc.B * sc.Y[e].transposed(), sc.B);
        sc.mu[e] = F->sqrt(sc.lambda[e]);
        if (F->mul(sc.mu[e], sc.mu[e]) != sc.lambda[e])
            throw std::logic_error("extension_scaffold: sqrt failed");
        Yh[e] = sc.Y[e].scaled(F->inv(sc.mu[e]));
    }

    // ε(g): B-scaling of Ŷ; a homomorphism of odd order d; δ = ε^((d+1)/2)
    std::uint64_t d = 1;
    for (int e = 0; e < n; ++e) {
        sc.epsilon[e] = form_scalar(Yh[e] * sc.B * Yh[e].transposed(), sc.B);
        d = std::lcm(d, F->elem_order(sc.epsilon[e]));
    }
    if (d % 2 == 0)
        throw std::logic_error("extension_scaffold: ε has even order");
    for (int e = 0; e < n; ++e) {
        sc.delta[e] = F->pow(sc.epsilon[e], (d + 1) / 2);
        if (F->mul(sc.delta[e], sc.delta[e]) != sc.epsilon[e])
            throw std::logic_error("extension_scaffold: δ² ≠ ε");
        Xh[e] = Yh[e].scaled(F->inv(sc.delta[e]));
    }

    // identities on element pairs: the cocycle relations and β ≡ 1
    std::vector<int> bs;
    if (static_cast<std::uint64_t>(n) * n <= 200000) {
        for (int b = 0; b < n; ++b) bs.push_back(b);
    } else {
        for (const Perm& g : T.generators()) bs.push_back(T.index_of(g));
    }
    for (int a = 0; a < n; ++a)
        for (int b : bs) {
            int ab = T.mul(a, b);
            GfMat P = sc.Y[a] * sc.Y[b];
            FElem alpha = matrix_scalar(sc.Y[ab], P);
            if (sc.lambda[ab] !=
                F->mul(F->sqr(alpha), F->mul(sc.lambda[a], sc.lambda[b])))
                throw std::logic_error("extension_scaffold: λ(gh) ≠ α²λ(g)λ(h)");
            if (!(Xh[ab] == Xh[a] * Xh[b]))
                throw std::logic_error("extension_scaffold: β ≢ 1");
        }

    // X̂ extends X and leaves B invariant, on every element
    for (int e = 0; e < n; ++e) {
        const Perm& g = T.element(e);
        if (N.contains(g) && !(Xh[e] == W.at(g)))
            throw std::logic_error("extension_scaffold: X̂ does not extend X");
        if (!(Xh[e] * sc.B * Xh[e].transposed() == sc.B))
            throw std::logic_error("extension_scaffold: B not X̂-invariant");
    }

    for (const Perm& g : T.generators())
        sc.Xhat.gens.push_back(Xh[T.index_of(g)]);
    if (!sc.Xhat.is_homomorphism())
        throw std::logic_error("extension_scaffold: X̂ is not a representation");
    return sc;
}

Rep canonical_selfdual_extension(const Rep& W, const PermGroup& T,
                                 std::mt19937_64& rng) {
    ExtensionScaffold sc = extension_scaffold(W, T, rng);
    const PermGroup& N = *W.G;
    if (!self_dual(sc.Xhat, rng))
        throw std::logic_error("canonical extension is not self-dual");
    // every other extension is a linear-character twist; none is self-dual
    if (T.order() > N.order()) {
        QuotientMap qm = make_quotient(T, N);
        for (const Rep& L : simples(qm.group, W.F, 1)) {
            if (L.dim != 1 || rep_trivial(L)) continue;
            Rep tw{W.F, &T, W.dim, {}, ""};
            for (std::size_t i = 0; i < T.generators().size(); ++i) {
                GfMat val = L.at(qm.image(T, T.generators()[i]));
                tw.gens.push_back(sc.Xhat.gens[i].scaled(val.get(0, 0)));
            }
            if (self_dual(tw, rng))
                throw std::logic_error("twisted extension is self-dual");
        }
    }
    return sc.Xhat;
}

int clifford_multiplicity(const Rep& V, const PermGroup& N, const Rep& W,
                          std::mt19937_64& rng) {
    auto rd = restriction_decomposition(V, N, rng);
    for (const Rep& f : rd.factors)
        if (is_isomorphic(f, W, rng)) return rd.e;
    return 0;
}

bool conjugate_to_dual(const Rep& W, const PermGroup& G,
                       std::mt19937_64& rng) {
    Rep Wd = dual_rep(W);
    for (const Perm& g : G.coset_transversal(*W.G))
        if (is_isomorphic(conjugate_rep(W, g), Wd, rng)) return true;
    return false;
}

Rep canonical_module(const Rep& W, const PermGroup& G, std::mt19937_64& rng,
                     const std::vector<Rep>* gsimples, std::uint64_t seed) {
    (void)seed;
    const PermGroup& N = *W.G;
    StabilizerData sd = stabilizer(W, G, rng);
    Rep Xhat = canonical_selfdual_extension(W, sd.T, rng);
    Rep V = induce_rep(Xhat, G);
    if (!is_irreducible(V, rng))
        throw std::logic_error("canonical module is reducible");
    if (!self_dual(V, rng))
        throw std::logic_error("canonical module is not self-dual");

    auto rd = restriction_decomposition(V, N, rng);
    std::size_t orbit = G.order() / sd.T.order();
    if (rd.e != 1 || rd.factors.size() != orbit)
        throw std::logic_error("canonical module: wrong restriction shape");
    // the factors are exactly the G-conjugates of W, each once; conjugates
    // are constant on the cosets enumerated by right_transversal
    std::vector<bool> used(rd.factors.size(), false);
    for (const Perm& g : right_transversal(G, sd.T)) {
        Rep c = conjugate_rep(W, g);
        bool hit = false;
        for (std::size_t i = 0; i < rd.factors.size(); ++i)
            if (!used[i] && is_isomorphic(c, rd.factors[i], rng)) {
                used[i] = hit = true;
                break;
            }
        if (!hit)
            throw std::logic_error("canonical module: missing conjugate of W");
    }

    if (gsimples) {
        for (const Rep& U : *gsimples) {
            if (!self_dual(U, rng)) continue;
            bool odd = clifford_multiplicity(U, N, W, rng) % 2 == 1;
            if (odd != is_isomorphic(U, V, rng))
                throw std::logic_error(
                    "canonical module: odd multiplicity is not unique");
        }
    }
    return V;
}

HyperbolicWitness hyperbolic_witness(const Rep& W, const StabilizerData& sd,
                                     const Rep& V, const PermGroup& G,
                                     std::mt19937_64& rng) {
    const PermGroup& N = *W.G;
    if (self_dual(W, rng))
        throw std::invalid_argument("hyperbolic_witness: W is self-dual");
    if (sd.index_flag != 2)
        throw std::invalid_argument("hyperbolic_witness: need |T*:T| = 2");

    // U: the irreducible T-module over W inducing to V
    std::vector<Rep> cands = chop(induce_rep(W, sd.T), rng);
    const Rep* U = nullptr;
    Rep Ufound;
    for (Rep& c : cands) {
        if (clifford_multiplicity(c, N, W, rng) == 0) continue;
        Rep ind = induce_rep(c, G);
        if (is_isomorphic(ind, V, rng)) {
            Ufound = std::move(c);
            U = &Ufound;
            break;
        }
    }
    if (!U) throw std::logic_error("hyperbolic_witness: no T-module over W");

    Rep X = induce_rep(*U, sd.Tstar);
    if (!is_irreducible(X, rng) || !self_dual(X, rng))
        throw std::logic_error("hyperbolic_witness: X = U↑T* not self-dual simple");
    GfMat BX = fong_form(X, rng);
    int du = U->dim;
    // U and τU are totally isotropic, so BX is hyperbolic in block form
    if (!BX.submatrix(0, du, 0, du).is_zero() ||
        !BX.submatrix(du, du, du, du).is_zero())
        throw std::logic_error("hyperbolic_witness: blocks not isotropic");
    QuadForm QX{GfMat(X.F, 1, X.dim), BX};  // Q(u1 + τu2) = B(u1, τu2)
    if (!quad_invariant(X, QX))
        throw std::logic_error("hyperbolic_witness: Q not T*-invariant");

    int m = static_cast<int>(G.order() / sd.Tstar.order());
    HyperbolicWitness hw{induce_rep(X, G), induce_quadratic(QX, m)};
    if (!is_isomorphic(hw.module, V, rng))
        throw std::logic_error("hyperbolic_witness: induced module is not V");
    if (!quad_invariant(hw.module, hw.Q))
        throw std::logic_error("hyperbolic_witness: induced form not invariant");
    GfMat P = polarize(hw.Q);
    if (!is_alternating(P) || P.rank() != hw.module.dim)
        throw std::logic_error("hyperbolic_witness: degenerate polarization");
    return hw;
}

namespace {

// restriction multiplicity matrix mult[v][w] of N-simples in G-simples
std::vector<std::vector<int>> restriction_matrix(const std::vector<Rep>& gs,
                                                 const std::vector<Rep>& ns,
                                                 const PermGroup& N,
                                                 std::mt19937_64& rng) {
    std::vector<std::vector<int>> mult(gs.size(),
                                       std::vector<int>(ns.size(), 0));
    for (std::size_t v = 0; v < gs.size(); ++v) {
        auto rd = restriction_decomposition(gs[v], N, rng);
        for (const Rep& f : rd.factors)
            for (std::size_t w = 0; w < ns.size(); ++w)
                if (is_isomorphic(f, ns[w], rng)) {
                    mult[v][w] = rd.e;
                    break;
                }
    }
    return mult;
}

}  // namespace

VerifyReport verify_T1(const PermGroup& G, const PermGroup& N, const Field* F,
                       std::uint64_t seed) {
    VerifyReport rep;
    rep.name = "T1(" + G.name() + "," + N.name() + ")";
    std::mt19937_64 rng(seed);
    auto gs = simples(G, F, seed);
    auto ns = simples(N, F, seed);
    auto mult = restriction_matrix(gs, ns, N, rng);
    std::vector<bool> gsd(gs.size());
    for (std::size_t v = 0; v < gs.size(); ++v) gsd[v] = self_dual(gs[v], rng);

    for (std::size_t w = 0; w < ns.size(); ++w) {
        bool conj = conjugate_to_dual(ns[w], G, rng);
        int witness = -1;
        for (std::size_t v = 0; v < gs.size(); ++v)
            if (gsd[v] && mult[v][w] % 2 == 1) witness = static_cast<int>(v);
        rep.check(conj == (witness >= 0),
                  mstr("W dim ", ns[w].dim) +
                      (conj ? mstr(": conjugate-to-dual, odd witness dim ",
                                   witness >= 0 ? gs[witness].dim : 0)
                            : ": no conjugate-to-dual, no odd witness"));
    }

    // dual-closed G-orbits of N-simples vs real 2-regular G-classes in N
    auto orbit = g_orbit_ids(ns, G, N, rng);
    std::set<int> closed;
    for (std::size_t w = 0; w < ns.size(); ++w) {
        Rep d = dual_rep(ns[w]);
        for (std::size_t x = 0; x < ns.size(); ++x)
            if (orbit[x] == orbit[w] && is_isomorphic(d, ns[x], rng))
                closed.insert(orbit[w]);
    }
    std::size_t t = 0;
    for (const auto& ob : g_orbits_on_subgroup_classes(G, N))
        if (ob.real && N.classes()[ob.members[0]].is_2regular) ++t;
    rep.check(closed.size() == t,
              mstr("dual-closed orbits = real 2-regular G-classes in N = ", t));
    return rep;
}

VerifyReport verify_T2(const PermGroup& G, const PermGroup& N, const Field* F,
                       std::uint64_t seed) {
    VerifyReport rep;
    rep.name = "T2(" + G.name() + "," + N.name() + ")";
    std::mt19937_64 rng(seed);
    auto gs = simples(G, F, seed);
    auto ns = simples(N, F, seed);
    for (const Rep& W : ns) {
        if (!self_dual(W, rng)) continue;
        try {
            StabilizerData sd = stabilizer(W, G, rng);
            Rep ext = canonical_selfdual_extension(W, sd.T, rng);
            Rep V = canonical_module(W, G, rng, &gs, seed);
            int m = clifford_multiplicity(V, N, W, rng);
            rep.check(m == 1, mstr("W dim ", W.dim) +
                                  mstr(": unique self-dual extension to |T| = ",
                                       sd.T.order()) +
                                  mstr(", canonical V dim ", V.dim) +
                                  mstr(", multiplicity ", m));
        } catch (const std::logic_error& ex) {
            rep.finding(mstr("W dim ", W.dim) + ": " + ex.what());
        }
    }
    return rep;
}

VerifyReport verify_T3(const PermGroup& G, const PermGroup& N, const Field* F,
                       std::uint64_t seed) {
    VerifyReport rep;
    rep.name = "T3(" + G.name() + "," + N.name() + ")";
    std::mt19937_64 rng(seed);
    auto gs = simples(G, F, seed);
    bool hit = false;
    for (const Rep& V : gs) {
        if (rep_trivial(V) || !self_dual(V, rng)) continue;
        if (quadratic_type(V, rng).has_value()) continue;
        Rep res = restrict_rep(V, N);
        if (rep_kernel_contains_all(res)) continue;
        hit = true;
        auto rd = restriction_decomposition(V, N, rng);
        rep.check(rd.e == 1, mstr("non-quadratic V dim ", V.dim) +
                                 mstr(": restriction multiplicity ", rd.e));
        for (const Rep& Wf : rd.factors) {
            bool good = self_dual(Wf, rng) && !rep_trivial(Wf) &&
                        !quadratic_type(Wf, rng).has_value();
            rep.check(good, mstr("  factor dim ", Wf.dim) +
                                ": self-dual non-quadratic");
        }
    }
    if (!hit) rep.note("vacuous: no non-quadratic self-dual V moves N");
    return rep;
}

VerifyReport verify_quadratic_criterion(const PermGroup& G,
                                        const PermGroup& N, const Field* F,
                                        std::uint64_t seed) {
    VerifyReport rep;
    rep.name = "quadratic_criterion(" + G.name() + "," + N.name() + ")";
    std::mt19937_64 rng(seed);
    auto all_quad = [&](const std::vector<Rep>& list) {
        for (const Rep& R : list) {
            if (rep_trivial(R) || !self_dual(R, rng)) continue;
            if (!quadratic_type(R, rng).has_value()) return false;
        }
        return true;
    };
    bool a = all_quad(simples(G, F, seed));
    bool b = all_quad(simples(N, F, seed));
    QuotientMap qm = make_quotient(G, N);
    bool c = all_quad(simples(qm.group, F, seed));
    rep.check(a == (b && c), std::string("G all-quadratic: ") +
                                 (a ? "yes" : "no") + ", N: " +
                                 (b ? "yes" : "no") + ", G/N: " +
                                 (c ? "yes" : "no"));
    return rep;
}

VerifyReport verify_cor_odd_quotient(const PermGroup& G, const PermGroup& N,
                                     const Field* F, std::uint64_t seed) {
    if ((G.order() / N.order()) % 2 == 0)
        throw std::invalid_argument("verify_cor_odd_quotient: |G:N| even");
    VerifyReport rep;
    rep.name = "cor_odd_quotient(" + G.name() + "," + N.name() + ")";
    std::mt19937_64 rng(seed);
    auto gs = simples(G, F, seed);
    auto ns = simples(N, F, seed);

    std::vector<bool> nsd(ns.size());
    for (std::size_t w = 0; w < ns.size(); ++w) nsd[w] = self_dual(ns[w], rng);

    // (i) W↑G has exactly one self-dual composition factor class
    for (std::size_t w = 0; w < ns.size(); ++w) {
        if (!nsd[w]) continue;
        std::vector<Rep> classes;
        for (Rep& f : chop(induce_rep(ns[w], G), rng)) {
            bool seen = false;
            for (const Rep& c : classes)
                if (is_isomorphic(f, c, rng)) seen = true;
            if (!seen) classes.push_back(std::move(f));
        }
        int sd = 0;
        for (const Rep& c : classes)
            if (self_dual(c, rng)) ++sd;
        rep.check(sd == 1, mstr("W dim ", ns[w].dim) +
                               mstr("↑G: self-dual factor classes = ", sd));
    }

    // (ii) self-dual V restricts multiplicity-free to self-dual simples
    int gcount = 0;
    for (const Rep& V : gs) {
        if (!self_dual(V, rng)) continue;
        ++gcount;
        auto rd = restriction_decomposition(V, N, rng);
        bool all_sd = true;
        for (const Rep& f : rd.factors) all_sd = all_sd && self_dual(f, rng);
        rep.check(rd.e == 1 && all_sd,
                  mstr("V dim ", V.dim) + mstr("↓N: e = ", rd.e) +
                      ", all factors self-dual");
    }

    // bijection with G-orbits of self-dual N-simples
    auto orbit = g_orbit_ids(ns, G, N, rng);
    std::set<int> sd_orbits;
    for (std::size_t w = 0; w < ns.size(); ++w)
        if (nsd[w]) sd_orbits.insert(orbit[w]);
    rep.check(static_cast<std::size_t>(gcount) == sd_orbits.size(),
              mstr("self-dual G-simples = self-dual N-orbits = ",
                   sd_orbits.size()));
    return rep;
}

VerifyReport verify_cor_subnormal(const PermGroup& G, const PermGroup& H,
                                  const Field* F, std::uint64_t seed) {
    subnormal_chain(G, H);  // throws unless H is subnormal
    VerifyReport rep;
    rep.name = "cor_subnormal(" + G.name() + "," + H.name() + ")";
    std::mt19937_64 rng(seed);
    auto gs = simples(G, F, seed);
    auto hs = simples(H, F, seed);
    for (const Rep& U : hs) {
        if (!self_dual(U, rng)) continue;
        int count = 0, mwit = 0;
        for (const Rep& V : gs) {
            if (!self_dual(V, rng)) continue;
            int m = multiplicity_in(U, restrict_rep(V, H));
            if (m % 2 == 1) {
                ++count;
                mwit = m;
            }
        }
        rep.check(count == 1, mstr("U dim ", U.dim) +
                                  mstr(": odd-multiplicity witnesses = ", count) +
                                  mstr(", multiplicity ", mwit));
    }
    return rep;
}

}  // namespace char2
