#include "char2/gfpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace char2 {

GfPoly::GfPoly(const Field* f, std::vector<FElem> coeffs)
    : F(f), c(std::move(coeffs)) {
    normalize();
}

void GfPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

GfPoly GfPoly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    FElem inv = F->inv(lead());
    GfPoly r = *this;
    for (auto& v : r.c) v = F->mul(v, inv);
    return r;
}

bool GfPoly::operator<(const GfPoly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (std::size_t i = c.size(); i-- > 0;)
        if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
}

GfPoly poly_add(const GfPoly& a, const GfPoly& b) {
    std::vector<FElem> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] ^= a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] ^= b.c[i];
    return GfPoly(a.F ? a.F : b.F, std::move(c));
}

GfPoly poly_mul(const GfPoly& a, const GfPoly& b) {
    if (a.is_zero() || b.is_zero()) return GfPoly::zero(a.F ? a.F : b.F);
    std::vector<FElem> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] ^= a.F->mul(a.c[i], b.c[j]);
    }
    return GfPoly(a.F, std::move(c));
}

std::pair<GfPoly, GfPoly> poly_divmod(const GfPoly& a, const GfPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    const Field* F = b.F;
    GfPoly r = a;
    if (r.degree() < b.degree()) return {GfPoly::zero(F), r};
    std::vector<FElem> q(r.degree() - b.degree() + 1, 0);
    FElem linv = F->inv(b.lead());
    for (int d = r.degree(); d >= b.degree() && !r.is_zero();
         d = r.degree()) {
        FElem coef = F->mul(r.c[d], linv);
        int shift = d - b.degree();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] ^= F->mul(coef, b.c[i]);
        r.normalize();
    }
    return {GfPoly(F, std::move(q)), r};
}

GfPoly poly_rem(const GfPoly& a, const GfPoly& b) {
    return poly_divmod(a, b).second;
}

GfPoly poly_gcd(GfPoly a, GfPoly b) {
    while (!b.is_zero()) {
        GfPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

GfPoly poly_powmod(const GfPoly& base, std::uint64_t e, const GfPoly& mod) {
    GfPoly r = GfPoly::one(mod.F);
    GfPoly b = poly_rem(base, mod);
    while (e) {
        if (e & 1) r = poly_rem(poly_mul(r, b), mod);
        b = poly_rem(poly_mul(b, b), mod);
        e >>= 1;
    }
    return r;
}

GfPoly poly_derivative(const GfPoly& a) {
    std::vector<FElem> c;
    for (std::size_t i = 1; i < a.c.size(); i += 2) {
        c.resize(i, 0);
        c[i - 1] = a.c[i];  // only odd-degree terms survive in char 2
    }
    return GfPoly(a.F, std::move(c));
}

FElem poly_eval(const GfPoly& a, FElem x) {
    FElem r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) r = a.F->mul(r, x) ^ a.c[i];
    return r;
}

GfMat poly_eval_mat(const GfPoly& a, const GfMat& A) {
    const Field* F = A.field();
    int n = A.rows();
    GfMat R(F, n, n);
    GfMat I = GfMat::identity(F, n);
    for (std::size_t i = a.c.size(); i-- > 0;) {
        R = R * A;
        if (a.c[i]) R.add_assign(I.scaled(a.c[i]));
    }
    return R;
}

namespace {

// squarefree decomposition in characteristic 2: list of (g, multiplicity)
std::vector<PolyFactor> squarefree(const GfPoly& f) {
    std::vector<PolyFactor> out;
    if (f.degree() < 1) return out;
    GfPoly c = poly_gcd(f, poly_derivative(f));
    GfPoly w = poly_divmod(f.monic(), c).first.monic();
    int i = 1;
    while (w.degree() > 0) {
        GfPoly y = poly_gcd(w, c);
        GfPoly z = poly_divmod(w, y).first.monic();
        if (z.degree() > 0) out.push_back({z, i});
        w = y;
        c = poly_divmod(c, y).first.monic();
        ++i;
    }
    if (c.degree() > 0) {
        // c = h(x)^2 with h obtained by square roots of even coefficients
        std::vector<FElem> h(c.c.size() / 2 + 1, 0);
        for (std::size_t j = 0; j < c.c.size(); j += 2)
            h[j / 2] = f.F->sqrt(c.c[j]);
        for (auto& pf : squarefree(GfPoly(f.F, std::move(h))))
            out.push_back({pf.factor, 2 * pf.multiplicity});
    }
    return out;
}

// distinct-degree factorization of a squarefree monic polynomial
std::vector<std::pair<GfPoly, int>> ddf(const GfPoly& f) {
    const Field* F = f.F;
    std::vector<std::pair<GfPoly, int>> out;
    GfPoly rest = f;
    GfPoly h = GfPoly::x(F);
    int d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            out.push_back({rest, rest.degree()});
            break;
        }
        h = poly_powmod(h, F->order(), rest);
        GfPoly g = poly_gcd(poly_add(h, GfPoly::x(F)), rest);
        if (g.degree() > 0) {
            out.push_back({g, d});
            rest = poly_divmod(rest, g).first.monic();
            h = poly_rem(h, rest);
        }
    }
    return out;
}

// equal-degree splitting, char-2 Cantor-Zassenhaus via trace maps
void edf(const GfPoly& f, int d, std::mt19937_64& rng,
         std::vector<GfPoly>& out) {
    const Field* F = f.F;
    if (f.degree() == d) { out.push_back(f.monic()); return; }
    int kd = F->k() * d;
    for (;;) {
        std::vector<FElem> rc(f.degree(), 0);
        for (auto& v : rc) v = rng() & (F->order() - 1);
        GfPoly a(F, std::move(rc));
        if (a.is_zero()) continue;
        // trace over GF(2): a + a^2 + a^4 + ... (kd terms)
        GfPoly t = a;
        GfPoly s = a;
        for (int i = 1; i < kd; ++i) {
            s = poly_rem(poly_mul(s, s), f);
            t = poly_add(t, s);
        }
        GfPoly g = poly_gcd(t, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(poly_divmod(f, g).first.monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<PolyFactor> poly_factor(const GfPoly& f, std::mt19937_64& rng) {
    if (f.degree() < 1) return {};
    std::map<GfPoly, int> acc;
    for (auto& [sf, mult] : squarefree(f.monic())) {
        for (auto& [part, d] : ddf(sf)) {
            std::vector<GfPoly> irr;
            edf(part, d, rng, irr);
            for (auto& p : irr) acc[p] += mult;
        }
    }
    std::vector<PolyFactor> out;
    for (auto& [p, m] : acc) out.push_back({p, m});
    return out;
}

GfPoly min_poly(const GfMat& A) {
    const Field* F = A.field();
    int n = A.rows();
    if (n == 0) return GfPoly::one(F);
    GfPoly p = GfPoly::one(F);
    // union of Krylov spans processed so far
    EchelonBasis seen(F, n);
    for (int start = 0; start < n; ++start) {
        GfMat e(F, 1, n);
        e.set(0, start, 1);
        if (seen.reduces_to_zero(e)) continue;
        // local minimal polynomial of A on e, tracked with augmented rows
        std::vector<GfMat> rows;       // iterates, echelonized
        std::vector<GfMat> augs;       // coefficient vectors
        std::vector<int> pivots;
        GfMat v = e;
        int step = 0;
        for (;;) {
            // reduce v against echelon, tracking coefficients
            GfMat coeff(F, 1, n + 2);
            coeff.set(0, step, 1);
            GfMat w = v;
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                FElem c = w.get(0, pivots[i]);
                if (c) {
                    w.row_addmul_from(0, rows[i], 0, c);
                    coeff.row_addmul_from(0, augs[i], 0, c);
                }
            }
            int piv = -1;
            for (int j = 0; j < n; ++j)
                if (w.get(0, j) != 0) { piv = j; break; }
            if (piv < 0) {
                // dependency found: coefficients of local min poly
                std::vector<FElem> pc(step + 1, 0);
                for (int i = 0; i <= step; ++i) pc[i] = coeff.get(0, i);
                GfPoly local(F, std::move(pc));
                local = local.monic();
                GfPoly g = poly_gcd(p, local);
                p = poly_divmod(poly_mul(p, local), g).first.monic();
                break;
            }
            FElem d = w.get(0, piv);
            if (d != 1) {
                FElem di = F->inv(d);
                w.row_scale(0, di);
                coeff.row_scale(0, di);
            }
            rows.push_back(w);
            augs.push_back(coeff);
            pivots.push_back(piv);
            seen.insert(v);
            v = v * A;
            ++step;
            if (step > n) throw std::logic_error("min_poly: no dependency");
        }
    }
    return p;
}

}  // namespace char2
