#include "char2/frm.hpp"

#include <stdexcept>

namespace char2 {

bool is_symmetric(const GfMat& B) { return B == B.transposed(); }

bool is_alternating(const GfMat& B) {
    if (!is_symmetric(B)) return false;
    for (int i = 0; i < B.rows(); ++i)
        if (B.get(i, i) != 0) return false;
    return true;
}

FElem QuadForm::eval(const GfMat& v) const {
    const Field* F = diag.field();
    int n = diag.cols();
    FElem acc = 0;
    for (int i = 0; i < n; ++i) {
        FElem li = v.get(0, i);
        if (!li) continue;
        acc ^= F->mul(F->sqr(li), diag.get(0, i));
        for (int j = i + 1; j < n; ++j) {
            FElem lj = v.get(0, j);
            if (lj) acc ^= F->mul(F->mul(li, lj), gram.get(i, j));
        }
    }
    return acc;
}

GfMat polarize(const QuadForm& Q) {
    const Field* F = Q.diag.field();
    int n = Q.diag.cols();
    GfMat B(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            GfMat u(F, 1, n), v(F, 1, n), w(F, 1, n);
            u.set(0, i, 1);
            v.set(0, j, 1);
            w.set(0, i, 1);
            w.set(0, j, 1);
            B.set(i, j, Q.eval(w) ^ Q.eval(u) ^ Q.eval(v));
        }
    return B;
}

std::vector<GfMat> invariant_bilinear_space(const Rep& M) {
    // X with M(g) X M(g)^T = X is exactly an intertwiner M -> M*
    return hom_space(M, dual_rep(M));
}

bool form_invariant(const Rep& M, const GfMat& B) {
    for (const auto& g : M.gens)
        if (!(g * B * g.transposed() == B)) return false;
    return true;
}

bool form_invariant_full(const Rep& M, const GfMat& B) {
    const PermGroup& G = *M.G;
    std::vector<GfMat> table(G.order());
    table[0] = GfMat::identity(M.F, M.dim);
    for (std::size_t e = 1; e < G.order(); ++e) {
        auto [p, gi] = G.bfs_link(static_cast<int>(e));
        table[e] = table[p] * M.gens[gi];
    }
    for (const auto& T : table)
        if (!(T * B * T.transposed() == B)) return false;
    return true;
}

namespace {

bool quad_invariant_under(const Rep& M, const QuadForm& Q, const GfMat& T) {
    // polarization must be preserved and Q must agree on basis images
    if (!(T * Q.gram * T.transposed() == Q.gram)) return false;
    for (int i = 0; i < M.dim; ++i) {
        GfMat e(M.F, 1, M.dim);
        e.set(0, i, 1);
        if (Q.eval(e * T) != Q.diag.get(0, i)) return false;
    }
    return true;
}

}  // namespace

bool quad_invariant(const Rep& M, const QuadForm& Q) {
    for (const auto& g : M.gens)
        if (!quad_invariant_under(M, Q, g)) return false;
    return true;
}

bool quad_invariant_full(const Rep& M, const QuadForm& Q) {
    const PermGroup& G = *M.G;
    GfMat T = GfMat::identity(M.F, M.dim);
    std::vector<GfMat> table(G.order());
    table[0] = T;
    for (std::size_t e = 1; e < G.order(); ++e) {
        auto [p, gi] = G.bfs_link(static_cast<int>(e));
        table[e] = table[p] * M.gens[gi];
        if (!quad_invariant_under(M, Q, table[e])) return false;
    }
    return true;
}

GfMat fong_form(const Rep& M, std::mt19937_64& rng) {
    bool trivial = true;
    for (const auto& g : M.gens)
        if (!(g == GfMat::identity(M.F, M.dim))) trivial = false;
    if (M.dim == 1 && trivial)
        throw std::invalid_argument("fong_form: module is trivial");
    auto S = iso_witness(M, dual_rep(M), rng);
    if (!S) throw std::invalid_argument("fong_form: module is not self-dual");
    GfMat B = *S + S->transposed();
    if (B.is_zero()) {
        // S symmetric; for a nontrivial simple it must already be alternating
        if (!is_alternating(*S))
            throw std::logic_error("fong_form: symmetric non-alternating invariant form");
        B = *S;
    }
    FElem lead = B.first_nonzero();
    if (lead != 1) B = B.scaled(M.F->inv(lead));
    if (!is_alternating(B) || B.rank() != M.dim || !form_invariant(M, B))
        throw std::logic_error("fong_form: certification failed");
    return B;
}

namespace {

// any solution x (1 x n) of x A^T = rhs ... solved as A x^T = rhs^T via rref
std::optional<GfMat> solve_affine(const GfMat& A, const GfMat& rhs) {
    const Field* F = A.field();
    int rows = A.rows(), n = A.cols();
    GfMat aug(F, rows, n + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, A.get(i, j));
        aug.set(i, n, rhs.get(0, i));
    }
    std::vector<int> piv = aug.rref();
    GfMat x(F, 1, n);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == n) return std::nullopt;  // inconsistent
        x.set(0, piv[r], aug.get(static_cast<int>(r), n));
    }
    return x;
}

}  // namespace

std::optional<QuadForm> invariant_quadratic_for(const Rep& M, const GfMat& B) {
    const Field* F = M.F;
    int n = M.dim;
    int ng = static_cast<int>(M.gens.size());
    GfMat A(F, std::max(1, ng * n), n);
    GfMat rhs(F, 1, std::max(1, ng * n));
    for (int g = 0; g < ng; ++g) {
        const GfMat& T = M.gens[g];
        for (int i = 0; i < n; ++i) {
            int row = g * n + i;
            // Q(e_i T) = d_i:  sum_j a_j^2 d_j + cross = d_i
            for (int j = 0; j < n; ++j) {
                FElem c = F->sqr(T.get(i, j));
                if (j == i) c ^= 1;
                A.set(row, j, c);
            }
            FElem cross = 0;
            for (int j = 0; j < n; ++j) {
                FElem aj = T.get(i, j);
                if (!aj) continue;
                for (int l = j + 1; l < n; ++l) {
                    FElem al = T.get(i, l);
                    if (al) cross ^= F->mul(F->mul(aj, al), B.get(j, l));
                }
            }
            rhs.set(0, row, cross);
        }
    }
    auto d = solve_affine(A, rhs);
    if (!d) return std::nullopt;
    QuadForm Q{*d, B};
    if (!quad_invariant(M, Q))
        throw std::logic_error("invariant_quadratic_for: witness failed certification");
    return Q;
}

int invariant_quadratic_space_dim(const Rep& M) {
    const Field* F = M.F;
    int n = M.dim;
    int ng = static_cast<int>(M.gens.size());
    GfMat A(F, std::max(1, ng * n), n);
    for (int g = 0; g < ng; ++g) {
        const GfMat& T = M.gens[g];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                FElem c = F->sqr(T.get(i, j));
                if (j == i) c ^= 1;
                A.set(g * n + i, j, c);
            }
    }
    return A.right_nullspace().rows();
}

std::optional<QuadForm> quadratic_type(const Rep& M, std::mt19937_64& rng) {
    GfMat B = fong_form(M, rng);  // enforces the preconditions
    return invariant_quadratic_for(M, B);
}

GfMat induce_bilinear(const GfMat& b, int index) {
    return GfMat::identity(b.field(), index).kron(b);
}

QuadForm induce_quadratic(const QuadForm& q, int index) {
    const Field* F = q.diag.field();
    int n = q.diag.cols();
    QuadForm out{GfMat(F, 1, index * n), induce_bilinear(q.gram, index)};
    for (int i = 0; i < index; ++i)
        for (int j = 0; j < n; ++j) out.diag.set(0, i * n + j, q.diag.get(0, j));
    return out;
}

QuadForm tensor_quadratic(const GfMat& BU, const GfMat& BV) {
    if (!is_alternating(BU) || !is_alternating(BV))
        throw std::invalid_argument("tensor_quadratic: inputs must be alternating");
    const Field* F = BU.field();
    QuadForm Q{GfMat(F, 1, BU.rows() * BV.rows()), BU.kron(BV)};
    return Q;
}

}  // namespace char2
