#include "char2/rep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace char2 {

GfMat Rep::at(int elem_index) const {
    std::vector<int> word;
    int e = elem_index;
    while (e != 0) {
        auto [parent, gi] = G->bfs_link(e);
        word.push_back(gi);
        e = parent;
    }
    GfMat M = GfMat::identity(F, dim);
    for (auto it = word.rbegin(); it != word.rend(); ++it) M = M * gens[*it];
    return M;
}

GfMat Rep::at(const Perm& g) const {
    int idx = G->index_of(g);
    if (idx < 0) throw std::invalid_argument("element not in the represented group");
    return at(idx);
}

bool Rep::is_homomorphism() const {
    // closure check over the whole element table; desk-scale only
    std::vector<GfMat> table(G->order());
    table[0] = GfMat::identity(F, dim);
    for (std::size_t e = 1; e < G->order(); ++e) {
        auto [parent, gi] = G->bfs_link(static_cast<int>(e));
        table[e] = table[parent] * gens[gi];
    }
    for (std::size_t e = 0; e < G->order(); ++e)
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            int prod = G->mul(static_cast<int>(e),
                              G->index_of(G->generators()[gi]));
            if (table[e] * gens[gi] != table[prod]) return false;
        }
    return true;
}

Rep trivial_rep(const PermGroup& G, const Field* F) {
    Rep R{F, &G, 1, {}};
    for (std::size_t i = 0; i < G.generators().size(); ++i)
        R.gens.push_back(GfMat::identity(F, 1));
    return R;
}

Rep perm_rep(const PermGroup& G, const Field* F) {
    Rep R{F, &G, G.degree(), {}};
    for (const auto& g : G.generators()) {
        GfMat M(F, G.degree(), G.degree());
        for (int i = 0; i < G.degree(); ++i) M.set(i, g[i], 1);
        R.gens.push_back(std::move(M));
    }
    return R;
}

Rep regular_rep(const PermGroup& G, const Field* F) {
    int n = static_cast<int>(G.order());
    Rep R{F, &G, n, {}};
    for (const auto& g : G.generators()) {
        int gi = G.index_of(g);
        GfMat M(F, n, n);
        for (int x = 0; x < n; ++x) M.set(x, G.mul(x, gi), 1);
        R.gens.push_back(std::move(M));
    }
    return R;
}

Rep dual_rep(const Rep& R) {
    Rep D{R.F, R.G, R.dim, {}};
    for (const auto& M : R.gens) D.gens.push_back(M.inverse().transposed());
    return D;
}

Rep tensor_rep(const Rep& A, const Rep& B) {
    if (A.G != B.G) throw std::invalid_argument("tensor: different groups");
    Rep T{A.F, A.G, A.dim * B.dim, {}};
    for (std::size_t i = 0; i < A.gens.size(); ++i)
        T.gens.push_back(A.gens[i].kron(B.gens[i]));
    return T;
}

Rep restrict_rep(const Rep& R, const PermGroup& H) {
    Rep S{R.F, &H, R.dim, {}};
    for (const auto& h : H.generators()) S.gens.push_back(R.at(h));
    return S;
}

Rep conjugate_rep(const Rep& R, const Perm& g) {
    Rep C{R.F, R.G, R.dim, {}};
    Perm gi = perm_inv(g);
    for (const auto& n : R.G->generators())
        C.gens.push_back(R.at(perm_mul(perm_mul(g, n), gi)));
    return C;
}

std::vector<Perm> right_transversal(const PermGroup& G, const PermGroup& H) {
    if (!G.has_subgroup(H)) throw std::invalid_argument("transversal: not a subgroup");
    std::vector<char> seen(G.order(), 0);
    std::vector<Perm> reps;
    for (std::size_t e = 0; e < G.order(); ++e) {
        if (seen[e]) continue;
        reps.push_back(G.element(static_cast<int>(e)));
        for (const auto& t : H.elements())
            seen[G.index_of(perm_mul(t, G.element(static_cast<int>(e))))] = 1;
    }
    return reps;
}

Rep induce_rep(const Rep& R, const PermGroup& G) {
    const PermGroup& H = *R.G;
    std::vector<Perm> reps = right_transversal(G, H);
    int n = static_cast<int>(reps.size());
    Rep I{R.F, &G, n * R.dim, {}};
    for (const auto& g : G.generators()) {
        GfMat M(R.F, n * R.dim, n * R.dim);
        for (int i = 0; i < n; ++i) {
            Perm rg = perm_mul(reps[i], g);
            // find j with r_i g in H r_j, i.e. r_i g r_j^-1 in H
            int jfound = -1;
            for (int j = 0; j < n; ++j) {
                Perm h = perm_mul(rg, perm_inv(reps[j]));
                if (H.contains(h)) {
                    GfMat B = R.at(h);
                    for (int a = 0; a < R.dim; ++a)
                        for (int b = 0; b < R.dim; ++b) {
                            FElem v = B.get(a, b);
                            if (v) M.set(i * R.dim + a, j * R.dim + b, v);
                        }
                    jfound = j;
                    break;
                }
            }
            if (jfound < 0) throw std::logic_error("induce: transversal broken");
        }
        I.gens.push_back(std::move(M));
    }
    return I;
}

namespace {

EchelonBasis spin_mats(const Field* F, int dim, const std::vector<GfMat>& mats,
                       const GfMat& seeds) {
    EchelonBasis eb(F, dim);
    std::vector<GfMat> queue;
    for (int i = 0; i < seeds.rows(); ++i) {
        GfMat v = seeds.row(i);
        if (eb.insert(v)) queue.push_back(eb.vec(eb.size() - 1));
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        for (const auto& M : mats) {
            GfMat w = queue[h] * M;
            if (eb.insert(w)) queue.push_back(eb.vec(eb.size() - 1));
            if (eb.size() == dim) return eb;
        }
    }
    return eb;
}

}  // namespace

EchelonBasis spin(const Rep& R, const GfMat& seeds) {
    return spin_mats(R.F, R.dim, R.gens, seeds);
}

Rep sub_rep(const Rep& R, const GfMat& basis) {
    Rep S{R.F, R.G, basis.rows(), {}};
    for (const auto& M : R.gens) {
        auto X = (basis * M).solve_left(basis);
        if (!X) throw std::invalid_argument("sub_rep: subspace is not invariant");
        S.gens.push_back(std::move(*X));
    }
    return S;
}

Rep quotient_rep(const Rep& R, const GfMat& basis) {
    // complete the basis with standard vectors
    EchelonBasis eb(R.F, R.dim);
    for (int i = 0; i < basis.rows(); ++i) eb.insert(basis.row(i));
    if (eb.size() != basis.rows())
        throw std::invalid_argument("quotient_rep: dependent basis");
    std::vector<int> extra;
    for (int j = 0; j < R.dim && eb.size() < R.dim; ++j) {
        GfMat e(R.F, 1, R.dim);
        e.set(0, j, 1);
        if (eb.insert(e)) extra.push_back(j);
    }
    int qd = static_cast<int>(extra.size());
    GfMat full(R.F, R.dim, R.dim);
    for (int i = 0; i < basis.rows(); ++i) full.set_row(i, basis.row(i));
    for (int i = 0; i < qd; ++i) full.set(basis.rows() + i, extra[i], 1);
    Rep Q{R.F, R.G, qd, {}};
    for (const auto& M : R.gens) {
        GfMat img(R.F, qd, R.dim);
        for (int i = 0; i < qd; ++i) {
            GfMat e(R.F, 1, R.dim);
            e.set(0, extra[i], 1);
            img.set_row(i, e * M);
        }
        auto X = img.solve_left(full);
        if (!X) throw std::logic_error("quotient_rep: completion failed");
        Q.gens.push_back(X->submatrix(0, qd, basis.rows(), qd));
    }
    return Q;
}

AlgebraElem random_algebra_elem(int ngens, const Field* F, std::mt19937_64& rng) {
    AlgebraElem z;
    int terms = 2 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        int len = 1 + static_cast<int>(rng() % 3);
        std::vector<int> w;
        for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % ngens));
        z.words.push_back(std::move(w));
        z.coeffs.push_back(rng() & (F->order() - 1));
    }
    return z;
}

GfMat eval_algebra_elem(const Rep& R, const AlgebraElem& z) {
    GfMat acc(R.F, R.dim, R.dim);
    for (std::size_t t = 0; t < z.words.size(); ++t) {
        if (!z.coeffs[t]) continue;
        GfMat M = GfMat::identity(R.F, R.dim);
        for (int gi : z.words[t]) M = M * R.gens[gi];
        acc.add_assign(M.scaled(z.coeffs[t]));
    }
    return acc;
}

namespace {

// all 1-dimensional subspaces of the row space of K (first nonzero coord 1)
std::vector<GfMat> one_spaces(const Field* F, const GfMat& K) {
    int d = K.rows();
    std::vector<GfMat> out;
    std::vector<std::uint64_t> c(d, 0);
    std::uint64_t q = F->order();
    for (;;) {
        int i = 0;
        while (i < d && ++c[i] == q) c[i++] = 0;
        if (i == d) break;
        int lead = d - 1;
        while (lead >= 0 && c[lead] == 0) --lead;
        bool norm = true;  // require the highest nonzero coefficient to be 1
        if (lead < 0 || c[lead] != 1) norm = false;
        if (!norm) continue;
        GfMat v(F, 1, K.cols());
        for (int j = 0; j < d; ++j)
            if (c[j]) v.row_addmul_from(0, K, j, c[j]);
        out.push_back(std::move(v));
    }
    return out;
}

struct SplitOutcome {
    bool decided = false;
    bool proper = false;
    GfMat basis;  // proper invariant row space when proper
};

SplitOutcome try_split_with(const Rep& R, const GfMat& z, std::mt19937_64& rng) {
    SplitOutcome out;
    const Field* F = R.F;
    GfPoly p = min_poly(z);
    auto factors = poly_factor(p, rng);
    // evaluate factors lazily in degree order: Horner at a d x d matrix
    // costs deg matrix products, and a small factor usually decides
    std::vector<std::size_t> order(factors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (factors[a].factor.degree() != factors[b].factor.degree())
            return factors[a].factor.degree() < factors[b].factor.degree();
        return factors[a].factor < factors[b].factor;
    });
    struct Cand {
        GfMat ez;
        int nullity;
        int deg;
    };
    const std::uint64_t kEnumLimit = 4096;
    for (std::size_t idx : order) {
        Cand c;
        c.ez = poly_eval_mat(factors[idx].factor, z);
        c.nullity = R.dim - c.ez.rank();
        c.deg = factors[idx].factor.degree();
        bool exact = (c.nullity == c.deg);
        bool enumerable = true;
        std::uint64_t count = 1;
        for (int i = 0; i < c.nullity && enumerable; ++i) {
            count *= F->order();
            if (count > kEnumLimit) enumerable = false;
        }
        if (!exact && !enumerable) {
            // kernel too large to certify irreducibility, but a proper spin
            // of any kernel row still certifies a submodule
            GfMat K = c.ez.kernel();
            for (int i = 0; i < K.rows(); ++i) {
                EchelonBasis S = spin(R, K.row(i));
                if (S.size() < R.dim) {
                    out.decided = true;
                    out.proper = true;
                    out.basis = S.basis();
                    return out;
                }
            }
            std::vector<GfMat> tmats;
            for (const auto& M : R.gens) tmats.push_back(M.transposed());
            GfMat Kt = c.ez.transposed().kernel();
            for (int i = 0; i < Kt.rows(); ++i) {
                EchelonBasis U = spin_mats(F, R.dim, tmats, Kt.row(i));
                if (U.size() < R.dim) {
                    out.decided = true;
                    out.proper = true;
                    out.basis = U.basis().right_nullspace();
                    return out;
                }
            }
            continue;  // undecided for this factor, try next
        }
        GfMat K = c.ez.kernel();
        std::vector<GfMat> prim;
        if (exact) {
            prim.push_back(K.row(0));
        } else {
            prim = one_spaces(F, K);
        }
        for (const auto& w : prim) {
            EchelonBasis S = spin(R, w);
            if (S.size() < R.dim) {
                out.decided = true;
                out.proper = true;
                out.basis = S.basis();
                return out;
            }
        }
        // transpose side
        std::vector<GfMat> tmats;
        for (const auto& M : R.gens) tmats.push_back(M.transposed());
        GfMat Kt = c.ez.transposed().kernel();
        std::vector<GfMat> dual;
        if (exact) {
            dual.push_back(Kt.row(0));
        } else {
            dual = one_spaces(F, Kt);
        }
        for (const auto& w : dual) {
            EchelonBasis U = spin_mats(F, R.dim, tmats, w);
            if (U.size() < R.dim) {
                out.decided = true;
                out.proper = true;
                out.basis = U.basis().right_nullspace();
                return out;
            }
        }
        out.decided = true;
        out.proper = false;  // Norton's criterion: irreducible
        return out;
    }
    return out;  // undecided; caller samples another algebra element
}

SplitOutcome try_split(const Rep& R, std::mt19937_64& rng) {
    SplitOutcome out;
    if (R.dim <= 1) {
        out.decided = true;
        out.proper = false;
        return out;
    }
    if (R.gens.empty()) {
        // trivial group: any coordinate subspace is invariant
        out.decided = true;
        out.proper = true;
        GfMat e(R.F, 1, R.dim);
        e.set(0, 0, 1);
        out.basis = e;
        return out;
    }
    for (int attempt = 0; attempt < 200; ++attempt) {
        AlgebraElem ze = random_algebra_elem(static_cast<int>(R.gens.size()), R.F, rng);
        GfMat z = eval_algebra_elem(R, ze);
        if (z.is_zero()) continue;
        out = try_split_with(R, z, rng);
        if (out.decided) return out;
    }
    throw std::runtime_error("meataxe: no decisive algebra element found");
}

}  // namespace

bool is_irreducible(const Rep& R, std::mt19937_64& rng) {
    if (R.dim == 0) return false;
    return !try_split(R, rng).proper;
}

std::vector<Rep> chop(const Rep& R, std::mt19937_64& rng) {
    std::vector<Rep> out;
    std::vector<Rep> stack{R};
    while (!stack.empty()) {
        Rep M = std::move(stack.back());
        stack.pop_back();
        if (M.dim == 0) continue;
        SplitOutcome s = try_split(M, rng);
        if (!s.proper) {
            out.push_back(std::move(M));
            continue;
        }
        Rep sub = sub_rep(M, s.basis);
        Rep quot = quotient_rep(M, s.basis);
        stack.push_back(std::move(quot));
        stack.push_back(std::move(sub));
    }
    return out;
}

namespace {

struct StdBasis {
    GfMat basis;
    std::vector<std::pair<int, int>> schedule;  // (source row, generator)
    bool full = false;
};

StdBasis standard_basis(const Rep& R, const GfMat& w) {
    StdBasis sb;
    EchelonBasis eb(R.F, R.dim);
    std::vector<GfMat> rows{w};
    eb.insert(w);
    for (std::size_t h = 0; h < rows.size() && eb.size() < R.dim; ++h) {
        for (std::size_t gi = 0; gi < R.gens.size(); ++gi) {
            GfMat u = rows[h] * R.gens[gi];
            if (eb.insert(u)) {
                rows.push_back(std::move(u));
                sb.schedule.push_back({static_cast<int>(h), static_cast<int>(gi)});
                if (eb.size() == R.dim) break;
            }
        }
    }
    sb.full = (eb.size() == R.dim);
    if (sb.full) {
        sb.basis = GfMat(R.F, R.dim, R.dim);
        for (int i = 0; i < R.dim; ++i) sb.basis.set_row(i, rows[i]);
    }
    return sb;
}

GfMat follow_schedule(const Rep& R, const GfMat& w,
                      const std::vector<std::pair<int, int>>& schedule) {
    GfMat B(R.F, R.dim, R.dim);
    B.set_row(0, w);
    int next = 1;
    for (auto [src, gi] : schedule) {
        B.set_row(next, B.row(src) * R.gens[gi]);
        ++next;
    }
    return B;
}

}  // namespace

std::optional<GfMat> iso_witness(const Rep& A, const Rep& B, std::mt19937_64& rng) {
    if (A.dim != B.dim) return std::nullopt;
    if (A.gens.size() != B.gens.size())
        throw std::invalid_argument("iso_witness: generator count mismatch");
    if (A.dim == 0 || A.gens.empty()) return GfMat::identity(A.F, A.dim);
    for (int attempt = 0; attempt < 40; ++attempt) {
        AlgebraElem ze = random_algebra_elem(static_cast<int>(A.gens.size()), A.F, rng);
        GfMat za = eval_algebra_elem(A, ze);
        GfMat zb = eval_algebra_elem(B, ze);
        GfPoly pa = min_poly(za);
        if (!(min_poly(zb) == pa)) return std::nullopt;
        auto factors = poly_factor(pa, rng);
        for (const auto& f : factors) {
            if (f.factor.degree() != 1) continue;
            GfMat ea = poly_eval_mat(f.factor, za);
            int nula = A.dim - ea.rank();
            if (nula != 1) continue;
            GfMat eb = poly_eval_mat(f.factor, zb);
            if (B.dim - eb.rank() != 1) return std::nullopt;
            GfMat wa = ea.kernel().row(0);
            GfMat wb = eb.kernel().row(0);
            StdBasis sa = standard_basis(A, wa);
            if (!sa.full) goto next_attempt;  // A not generated by wa; resample
            {
                GfMat bb = follow_schedule(B, wb, sa.schedule);
                if (bb.rank() != B.dim) return std::nullopt;
                GfMat S = sa.basis.inverse() * bb;
                for (std::size_t gi = 0; gi < A.gens.size(); ++gi)
                    if (!(A.gens[gi] * S == S * B.gens[gi])) return std::nullopt;
                return S;
            }
        }
    next_attempt:;
    }
    // decisive fallback for awkward cases (any nonzero hom between
    // irreducibles is invertible)
    if (A.dim <= 64) {
        auto basis = hom_space(A, B);
        for (auto& S : basis)
            if (S.rank() == A.dim) return S;
        return std::nullopt;
    }
    throw std::runtime_error("iso_witness: inconclusive after retries");
}

bool is_isomorphic(const Rep& A, const Rep& B, std::mt19937_64& rng) {
    return iso_witness(A, B, rng).has_value();
}

std::vector<GfMat> hom_space(const Rep& A, const Rep& B) {
    if (A.gens.size() != B.gens.size())
        throw std::invalid_argument("hom_dim: generator count mismatch");
    int na = A.dim, nb = B.dim;
    int unknowns = na * nb;
    int ngens = static_cast<int>(A.gens.size());
    GfMat C(A.F, std::max(1, ngens * unknowns), unknowns);
    for (int g = 0; g < ngens; ++g) {
        const GfMat &Ag = A.gens[g], &Bg = B.gens[g];
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) {
                int row = g * unknowns + i * nb + j;
                for (int l = 0; l < na; ++l) {
                    FElem v = Ag.get(i, l);
                    if (v) C.set(row, l * nb + j, A.F->add(C.get(row, l * nb + j), v));
                }
                for (int l = 0; l < nb; ++l) {
                    FElem v = Bg.get(l, j);
                    if (v) C.set(row, i * nb + l, A.F->add(C.get(row, i * nb + l), v));
                }
            }
    }
    GfMat null = C.right_nullspace();
    std::vector<GfMat> out;
    for (int r = 0; r < null.rows(); ++r) {
        GfMat S(A.F, na, nb);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) S.set(i, j, null.get(r, i * nb + j));
        out.push_back(std::move(S));
    }
    return out;
}

int hom_dim(const Rep& A, const Rep& B) {
    return static_cast<int>(hom_space(A, B).size());
}

int multiplicity_in(const Rep& S, const Rep& M) { return hom_dim(S, M); }

RestrictionDecomposition restriction_decomposition(const Rep& V,
                                                   const PermGroup& N,
                                                   std::mt19937_64& rng) {
    Rep R = restrict_rep(V, N);
    RestrictionDecomposition out;
    std::vector<int> mult;
    for (auto& f : chop(R, rng)) {
        bool matched = false;
        for (std::size_t i = 0; i < out.factors.size(); ++i)
            if (is_isomorphic(f, out.factors[i], rng)) {
                ++mult[i];
                matched = true;
                break;
            }
        if (!matched) {
            out.factors.push_back(std::move(f));
            mult.push_back(1);
        }
    }
    for (std::size_t i = 1; i < mult.size(); ++i)
        if (mult[i] != mult[0])
            throw std::runtime_error("restriction is not N-homogeneous with constant multiplicity");
    out.e = mult.empty() ? 0 : mult[0];
    return out;
}

namespace {

// memoized by group content, field parameters and seed; the cached copies
// get their G/F pointers re-aimed at the caller's objects, which the key
// guarantees are identical as groups resp. fields
struct SimplesKey {
    std::uint64_t ghash;
    std::uint64_t order;
    std::uint64_t m;
    int k;
    std::uint64_t seed;
    bool operator<(const SimplesKey& o) const {
        return std::tie(ghash, order, m, k, seed) <
               std::tie(o.ghash, o.order, o.m, o.k, o.seed);
    }
};

std::uint64_t group_hash(const PermGroup& G) {
    std::uint64_t h = 1469598103934665603ull;
    for (const Perm& g : G.generators())
        for (int im : g) h = (h ^ static_cast<std::uint64_t>(im)) * 1099511628211ull;
    return h;
}

std::vector<Rep> simples_uncached(const PermGroup& G, const Field* F,
                                  std::uint64_t seed);

}  // namespace

std::vector<Rep> simples(const PermGroup& G, const Field* F, std::uint64_t seed) {
    static thread_local std::map<SimplesKey, std::vector<Rep>> cache;
    SimplesKey key{group_hash(G), G.order(), F->modulus(), F->k(), seed};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, simples_uncached(G, F, seed)).first;
    std::vector<Rep> out = it->second;
    for (Rep& r : out) {
        r.G = &G;
        r.F = F;
        for (GfMat& g : r.gens) g.rebind_field(F);
    }
    return out;
}

namespace {

std::vector<Rep> simples_uncached(const PermGroup& G, const Field* F,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t ell = G.regular_classes().size();
    std::vector<Rep> found;
    auto known = [&](const Rep& r) {
        for (const auto& s : found)
            if (is_isomorphic(r, s, rng)) return true;
        return false;
    };
    auto add_factors = [&](const Rep& module) {
        for (auto& f : chop(module, rng)) {
            if (found.size() >= ell) return;
            if (known(f)) continue;
            Rep d = dual_rep(f);  // close under duals as we go
            found.push_back(std::move(f));
            if (found.size() >= ell) return;
            if (!known(d)) found.push_back(std::move(d));
        }
    };
    add_factors(perm_rep(G, F));
    // simples with a kernel are inflations from proper quotients by the
    // normal closures of single classes; much cheaper than big tensors
    auto inflate_from_quotients = [&] {
        std::set<std::uint64_t> quot_seen;
        for (const auto& c : G.classes()) {
            if (found.size() >= ell) return;
            if (c.element_order == 1) continue;
            std::vector<Perm> cgens;
            for (int e : c.members) cgens.push_back(G.elements()[e]);
            PermGroup N = G.subgroup(std::move(cgens));
            if (N.order() == 1 || N.order() == G.order()) continue;
            std::uint64_t nkey = 1469598103934665603ull;
            {
                std::vector<int> idx;
                idx.reserve(N.order());
                for (const Perm& e : N.elements())
                    idx.push_back(G.index_of(e));
                std::sort(idx.begin(), idx.end());
                for (int v : idx)
                    nkey = (nkey ^ static_cast<std::uint64_t>(v)) *
                           1099511628211ull;
            }
            if (!quot_seen.insert(nkey).second) continue;
            QuotientMap qm = make_quotient(G, N);
            for (Rep& S : simples(qm.group, F, seed)) {
                Rep infl{F, &G, S.dim, {}, ""};
                for (const Perm& g : G.generators())
                    infl.gens.push_back(S.at(qm.image(G, g)));
                if (!known(infl)) found.push_back(std::move(infl));
                if (found.size() >= ell) return;
            }
        }
    };
    // tensor closure (Burnside: the natural module is faithful)
    std::set<std::pair<int, int>> done;
    bool tried_quotients = false;
    while (found.size() < ell) {
        // smallest unprocessed pair by tensor dimension
        int bi = -1, bj = -1;
        long best = -1;
        for (int i = 0; i < static_cast<int>(found.size()); ++i)
            for (int j = i; j < static_cast<int>(found.size()); ++j) {
                if (done.count({i, j})) continue;
                long d = static_cast<long>(found[i].dim) * found[j].dim;
                if (best < 0 || d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        if (!tried_quotients && (bi < 0 || best > 1000)) {
            tried_quotients = true;
            inflate_from_quotients();
            continue;
        }
        if (bi < 0)
            throw std::runtime_error("simples: tensor closure exhausted early");
        done.insert({bi, bj});
        add_factors(tensor_rep(found[bi], found[bj]));
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const Rep& a, const Rep& b) { return a.dim < b.dim; });
    return found;
}

}  // namespace

}  // namespace char2
