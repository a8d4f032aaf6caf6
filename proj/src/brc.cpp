#include "char2/brc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace char2 {

namespace {

bool cyclo_less(const Cyclo& a, const Cyclo& b) {
    // rational values first, then by coefficient vector
    if (a.is_rational() != b.is_rational()) return a.is_rational();
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(),
                                        b.c.end());
}

bool values_less(const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return cyclo_less(a[i], b[i]);
    }
    return false;
}

}  // namespace

BrauerCharacter brauer_character(const Rep& M, const CycloField& K) {
    const Field* F = M.F;
    const PermGroup& G = *M.G;
    std::uint64_t m = K.modulus();
    if (F->modulus() != m)
        throw std::invalid_argument("brauer_character: field/cyclotomic mismatch");
    BrauerCharacter ch;
    ch.module_label = M.label;
    ch.degree = M.dim;
    for (int c : G.regular_classes()) {
        const ConjClass& cc = G.classes()[c];
        std::uint64_t o = cc.element_order;
        GfMat A = M.at(cc.rep);
        FElem w = F->pow(F->unity_root(), m / o);
        Cyclo val = K.zero();
        int total = 0;
        for (std::uint64_t j = 0; j < o; ++j) {
            // dim ker(A + w^j I)
            GfMat B = A + GfMat::identity(F, M.dim).scaled(F->pow(w, j));
            int mj = M.dim - B.rank();
            if (mj) {
                total += mj;
                val = K.add(val, K.scale(K.zeta((m / o) * j % m), mj));
            }
        }
        if (total != M.dim)
            throw std::logic_error("brauer_character: eigenvalues missing");
        ch.values.push_back(std::move(val));
    }
    return ch;
}

BrauerTable brauer_table(const PermGroup& G, const Field* F,
                         const CycloField* K, std::vector<Rep>& simples) {
    int l = static_cast<int>(simples.size());
    BrauerTable bt(K, l);
    bt.classes = G.regular_classes();
    if (static_cast<int>(bt.classes.size()) != l)
        throw std::invalid_argument("brauer_table: wrong number of simples");

    std::vector<BrauerCharacter> chars;
    for (const Rep& M : simples) chars.push_back(brauer_character(M, *K));
    std::vector<int> order(l);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (chars[a].degree != chars[b].degree)
            return chars[a].degree < chars[b].degree;
        return values_less(chars[a].values, chars[b].values);
    });

    std::vector<Rep> sorted;
    int last_dim = -1;
    char letter = 'a';
    for (int i = 0; i < l; ++i) {
        Rep& M = simples[order[i]];
        letter = (M.dim == last_dim) ? static_cast<char>(letter + 1) : 'a';
        last_dim = M.dim;
        M.label = std::to_string(M.dim) + letter;
        chars[order[i]].module_label = M.label;
        bt.rows.push_back(std::move(chars[order[i]]));
        sorted.push_back(std::move(M));
    }
    simples = std::move(sorted);

    for (int u = 0; u < l; ++u)
        for (int j = 0; j < l; ++j) bt.table.at(u, j) = bt.rows[u].values[j];
    bt.inverse = bt.table.inverse();  // throws when singular: a finding
    return bt;
}

std::vector<mpz_class> pim_degrees(const BrauerTable& bt, const PermGroup& G) {
    const CycloField* K = bt.table.field();
    auto [g2, godd] = two_part(static_cast<std::int64_t>(G.order()));
    std::vector<mpz_class> phi;
    mpz_class total = 0;
    for (int u = 0; u < bt.table.rows(); ++u) {
        Cyclo v = K->scale(bt.inverse.at(0, u), mpq_class(G.order()));
        auto r = K->as_rational(v);
        if (!r || r->get_den() != 1 || *r <= 0)
            throw std::logic_error("pim_degrees: non-integral degree");
        mpz_class d = r->get_num();
        if (d % g2 != 0)
            throw std::logic_error("pim_degrees: degree not divisible by |G|_2");
        total += d * bt.rows[u].degree;
        phi.push_back(std::move(d));
    }
    if (total != mpz_class(static_cast<unsigned long>(G.order())))
        throw std::logic_error("pim_degrees: dimension count off");
    return phi;
}

SelfDualPartition self_dual_partition(const std::vector<Rep>& simples,
                                      std::mt19937_64& rng) {
    SelfDualPartition out;
    std::vector<bool> done(simples.size(), false);
    for (std::size_t i = 0; i < simples.size(); ++i) {
        if (done[i]) continue;
        Rep d = dual_rep(simples[i]);
        if (is_isomorphic(simples[i], d, rng)) {
            out.self_dual.push_back(static_cast<int>(i));
            done[i] = true;
            continue;
        }
        for (std::size_t j = i + 1; j < simples.size(); ++j)
            if (!done[j] && is_isomorphic(simples[j], d, rng)) {
                out.pairs.emplace_back(static_cast<int>(i),
                                       static_cast<int>(j));
                done[i] = done[j] = true;
                break;
            }
        if (!done[i])
            throw std::logic_error("self_dual_partition: dual not in list");
    }
    return out;
}

DetSquared det_squared_check(const BrauerTable& bt, const PermGroup& G) {
    const CycloField* K = bt.table.field();
    Cyclo det = bt.table.determinant();
    Cyclo det2 = K->mul(det, det);
    DetSquared out;
    out.product = 1;
    for (int c : bt.classes) {
        auto [c2, codd] =
            two_part(static_cast<std::int64_t>(G.classes()[c].centralizer_order));
        out.product *= static_cast<long>(codd);
    }
    auto r = K->as_rational(det2);
    if (r && r->get_den() == 1) {
        if (r->get_num() == out.product) {
            out.ok = true;
            out.sign = 1;
        } else if (r->get_num() == -out.product) {
            out.ok = true;
            out.sign = -1;
        }
    }
    return out;
}

int radical_codimension(const std::vector<Rep>& simples) {
    int sum = 0;
    for (const Rep& M : simples) sum += M.dim * M.dim;
    return sum;
}

int radical_codimension_oracle(const std::vector<Rep>& simples) {
    if (simples.empty()) return 0;
    const PermGroup& G = *simples[0].G;
    const Field* F = simples[0].F;
    int cols = radical_codimension(simples);
    GfMat E(F, static_cast<int>(G.order()), cols);
    for (std::size_t e = 0; e < G.order(); ++e) {
        int c0 = 0;
        for (const Rep& M : simples) {
            GfMat A = M.at(static_cast<int>(e));
            for (int i = 0; i < M.dim; ++i)
                for (int j = 0; j < M.dim; ++j)
                    E.set(static_cast<int>(e), c0 + i * M.dim + j, A.get(i, j));
            c0 += M.dim * M.dim;
        }
    }
    return E.rank();
}

}  // namespace char2
