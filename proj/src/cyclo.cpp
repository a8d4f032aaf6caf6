#include "char2/cyclo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace char2 {

namespace {

using QPoly = std::vector<mpq_class>;
using ZPoly = std::vector<mpz_class>;

void qnorm(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    qnorm(a);
    if (b.empty()) throw std::domain_error("qdivmod by zero");
    if (a.size() < b.size()) return {{}, a};
    QPoly q(a.size() - b.size() + 1, mpq_class(0));
    mpq_class linv = 1 / b.back();
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        mpq_class coef = a.back() * linv;
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
        qnorm(a);
        if (a.empty()) break;
    }
    return {q, a};
}

// extended gcd over Q[x]: returns (g, s, t) with s*a + t*b = g (monic)
std::tuple<QPoly, QPoly, QPoly> qxgcd(QPoly a, QPoly b) {
    QPoly s0{mpq_class(1)}, s1{}, t0{}, t1{mpq_class(1)};
    qnorm(a);
    qnorm(b);
    while (!b.empty()) {
        auto [q, r] = qdivmod(a, b);
        QPoly s2 = s0, t2 = t0;
        QPoly qs = qmul(q, s1), qt = qmul(q, t1);
        s2.resize(std::max(s2.size(), qs.size()), mpq_class(0));
        t2.resize(std::max(t2.size(), qt.size()), mpq_class(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        qnorm(s2);
        qnorm(t2);
        a = b;
        b = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (a.empty()) throw std::domain_error("xgcd of zero polynomials");
    mpq_class linv = 1 / a.back();
    for (auto& v : a) v *= linv;
    for (auto& v : s0) v *= linv;
    for (auto& v : t0) v *= linv;
    return {a, s0, t0};
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b, const mpz_class& mod) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    for (auto& v : c) v = ((v % mod) + mod) % mod;
    return c;
}

void znorm(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b, const mpz_class& mod) {
    ZPoly c(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    for (auto& v : c) v = ((v % mod) + mod) % mod;
    znorm(c);
    return c;
}

ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b, const mpz_class& mod) {
    ZPoly c(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    for (auto& v : c) v = ((v % mod) + mod) % mod;
    znorm(c);
    return c;
}

// division by a monic polynomial, coefficients mod `mod`
std::pair<ZPoly, ZPoly> zpoly_divmod(ZPoly a, const ZPoly& b,
                                     const mpz_class& mod) {
    znorm(a);
    if (b.empty() || b.back() != 1)
        throw std::domain_error("zpoly_divmod: divisor must be monic");
    if (a.size() < b.size()) return {{}, a};
    ZPoly q(a.size() - b.size() + 1, mpz_class(0));
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        mpz_class coef = a.back();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= coef * b[i];
            a[shift + i] = ((a[shift + i] % mod) + mod) % mod;
        }
        a.pop_back();  // leading term cancels exactly (b monic)
        znorm(a);
    }
    return {q, a};
}

}  // namespace

bool Cyclo::is_zero() const {
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

bool Cyclo::operator==(const Cyclo& o) const {
    std::size_t n = std::max(c.size(), o.c.size());
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class a = i < c.size() ? c[i] : mpq_class(0);
        mpq_class b = i < o.c.size() ? o.c[i] : mpq_class(0);
        if (a != b) return false;
    }
    return true;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c[i].get_str();
        } else {
            if (c[i] != 1) os << c[i].get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycloField::CycloField(std::uint64_t m) : m_(m) {
    if (m == 0) throw std::invalid_argument("cyclotomic modulus 0");
    // Phi_m by recursive exact division of x^d - 1 over divisors
    std::vector<std::vector<mpz_class>> phis(m + 1);
    for (std::uint64_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        ZPoly num(d + 1, mpz_class(0));
        num[0] = -1;
        num[d] = 1;
        QPoly q(num.size());
        for (std::size_t i = 0; i < num.size(); ++i) q[i] = num[i];
        for (std::uint64_t e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            QPoly div(phis[e].size());
            for (std::size_t i = 0; i < phis[e].size(); ++i) div[i] = phis[e][i];
            auto [quot, rem] = qdivmod(q, div);
            qnorm(rem);
            if (!rem.empty()) throw std::logic_error("Phi_m division not exact");
            q = quot;
        }
        ZPoly z(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i].get_den() != 1)
                throw std::logic_error("Phi_m has non-integer coefficient");
            z[i] = q[i].get_num();
        }
        phis[d] = z;
    }
    phi_ = phis[m];
    deg_ = static_cast<int>(phi_.size()) - 1;
    // power reduction table: x^(deg+i) mod Phi
    QPoly head(deg_);
    for (int j = 0; j < deg_; ++j) head[j] = mpq_class(-phi_[j]);
    powers_.push_back(head);
    // cover both products of reduced elements (power 2deg-2) and bare
    // zeta powers up to m-1
    int npow = std::max(deg_, static_cast<int>(m_) - deg_);
    for (int i = 1; i < npow; ++i) {
        QPoly prev = powers_.back();
        QPoly next(deg_, mpq_class(0));
        // multiply by x and reduce
        mpq_class top = prev.empty() ? mpq_class(0) : prev[deg_ - 1];
        for (int j = deg_ - 1; j >= 1; --j) next[j] = prev[j - 1];
        next[0] = 0;
        if (top != 0)
            for (int j = 0; j < deg_; ++j) next[j] += top * head[j];
        powers_.push_back(next);
    }
}

Cyclo CycloField::reduce(std::vector<mpq_class> poly) const {
    Cyclo r;
    r.c.assign(deg_, mpq_class(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] == 0) continue;
        if (static_cast<int>(i) < deg_) {
            r.c[i] += poly[i];
        } else {
            const QPoly& pw = powers_[i - deg_];
            for (int j = 0; j < deg_; ++j) r.c[j] += poly[i] * pw[j];
        }
    }
    return r;
}

Cyclo CycloField::zero() const {
    Cyclo r;
    r.c.assign(deg_, mpq_class(0));
    return r;
}

Cyclo CycloField::from_int(long v) const {
    Cyclo r = zero();
    if (deg_ > 0) r.c[0] = v;
    return r;
}

Cyclo CycloField::from_rational(const mpq_class& v) const {
    Cyclo r = zero();
    if (deg_ > 0) r.c[0] = v;
    return r;
}

Cyclo CycloField::zeta(std::uint64_t power) const {
    power %= m_;
    std::vector<mpq_class> p(power + 1, mpq_class(0));
    p[power] = 1;
    return reduce(std::move(p));
}

Cyclo CycloField::add(const Cyclo& a, const Cyclo& b) const {
    Cyclo r = zero();
    for (int i = 0; i < deg_; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Cyclo CycloField::sub(const Cyclo& a, const Cyclo& b) const {
    Cyclo r = zero();
    for (int i = 0; i < deg_; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Cyclo CycloField::neg(const Cyclo& a) const {
    Cyclo r = zero();
    for (int i = 0; i < deg_; ++i) r.c[i] = -a.c[i];
    return r;
}

Cyclo CycloField::scale(const Cyclo& a, const mpq_class& s) const {
    Cyclo r = zero();
    for (int i = 0; i < deg_; ++i) r.c[i] = a.c[i] * s;
    return r;
}

Cyclo CycloField::mul(const Cyclo& a, const Cyclo& b) const {
    return reduce(qmul(a.c, b.c));
}

Cyclo CycloField::inv(const Cyclo& a) const {
    if (a.is_zero()) throw std::domain_error("cyclotomic inverse of zero");
    QPoly phi(phi_.size());
    for (std::size_t i = 0; i < phi_.size(); ++i) phi[i] = mpq_class(phi_[i]);
    QPoly ac = a.c;
    qnorm(ac);
    auto [g, s, t] = qxgcd(ac, phi);
    if (g.size() != 1) throw std::logic_error("Phi_m not irreducible?");
    return reduce(std::move(s));
}

Cyclo CycloField::conj(const Cyclo& a) const {
    // zeta^i -> zeta^(m-i)
    Cyclo r = zero();
    for (int i = 0; i < deg_; ++i) {
        if (a.c[i] == 0) continue;
        Cyclo z = zeta((m_ - static_cast<std::uint64_t>(i) % m_) % m_);
        for (int j = 0; j < deg_; ++j) r.c[j] += a.c[i] * z.c[j];
    }
    return r;
}

std::optional<mpq_class> CycloField::as_rational(const Cyclo& a) const {
    if (!a.is_rational()) return std::nullopt;
    return a.c.empty() ? mpq_class(0) : a.c[0];
}

CycloMat::CycloMat(const CycloField* K, int rows, int cols)
    : K_(K), nr_(rows), nc_(cols),
      e_(static_cast<std::size_t>(rows) * cols, K->zero()) {}

CycloMat CycloMat::operator*(const CycloMat& o) const {
    CycloMat r(K_, nr_, o.nc_);
    for (int i = 0; i < nr_; ++i)
        for (int l = 0; l < nc_; ++l) {
            if (at(i, l).is_zero()) continue;
            for (int j = 0; j < o.nc_; ++j)
                r.at(i, j) = K_->add(r.at(i, j), K_->mul(at(i, l), o.at(l, j)));
        }
    return r;
}

CycloMat CycloMat::inverse() const {
    if (nr_ != nc_) throw std::invalid_argument("CycloMat: non-square");
    CycloMat a = *this;
    CycloMat inv(K_, nr_, nr_);
    for (int i = 0; i < nr_; ++i) inv.at(i, i) = K_->one();
    for (int col = 0; col < nc_; ++col) {
        int piv = -1;
        for (int i = col; i < nr_; ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) throw std::domain_error("CycloMat: singular");
        for (int j = 0; j < nc_; ++j) {
            std::swap(a.at(col, j), a.at(piv, j));
            std::swap(inv.at(col, j), inv.at(piv, j));
        }
        Cyclo d = K_->inv(a.at(col, col));
        for (int j = 0; j < nc_; ++j) {
            a.at(col, j) = K_->mul(a.at(col, j), d);
            inv.at(col, j) = K_->mul(inv.at(col, j), d);
        }
        for (int i = 0; i < nr_; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Cyclo f = a.at(i, col);
            for (int j = 0; j < nc_; ++j) {
                a.at(i, j) = K_->sub(a.at(i, j), K_->mul(f, a.at(col, j)));
                inv.at(i, j) = K_->sub(inv.at(i, j), K_->mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

Cyclo CycloMat::determinant() const {
    if (nr_ != nc_) throw std::invalid_argument("CycloMat: non-square");
    CycloMat a = *this;
    Cyclo det = K_->one();
    for (int col = 0; col < nc_; ++col) {
        int piv = -1;
        for (int i = col; i < nr_; ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return K_->zero();
        if (piv != col) {
            for (int j = 0; j < nc_; ++j) std::swap(a.at(col, j), a.at(piv, j));
            det = K_->neg(det);
        }
        det = K_->mul(det, a.at(col, col));
        Cyclo d = K_->inv(a.at(col, col));
        for (int i = col + 1; i < nr_; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Cyclo f = K_->mul(a.at(i, col), d);
            for (int j = col; j < nc_; ++j)
                a.at(i, j) = K_->sub(a.at(i, j), K_->mul(f, a.at(col, j)));
        }
    }
    return det;
}

TwoAdicChannel::TwoAdicChannel(const CycloField* K, const Field* F, int precision)
    : K_(K), F_(F), s_(1) {
    if (K->modulus() != F->modulus())
        throw std::invalid_argument("channel: modulus mismatch");
    // minimal polynomial of u over GF(2): product of (x - u^(2^i))
    int k = F->k();
    std::vector<FElem> g{1};
    FElem w = F->unity_root();
    for (int i = 0; i < k; ++i) {
        std::vector<FElem> next(g.size() + 1, 0);
        for (std::size_t j = 0; j < g.size(); ++j) {
            next[j + 1] ^= g[j];
            next[j] ^= F->mul(g[j], w);
        }
        g = next;
        w = F->mul(w, w);
    }
    g_.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] > 1) throw std::logic_error("min poly of u not over GF(2)");
        g_[i] = static_cast<long>(g[i]);
    }
    // cofactor of Phi_m mod 2
    ZPoly phi2(K->cyclotomic_poly().size());
    for (std::size_t i = 0; i < phi2.size(); ++i)
        phi2[i] = ((K->cyclotomic_poly()[i] % 2) + 2) % 2;
    auto [h, r] = zpoly_divmod(phi2, g_, mpz_class(2));
    znorm(r);
    if (!r.empty()) throw std::logic_error("min poly does not divide Phi_m mod 2");
    h_ = h;
    znorm(h_);
    if (h_.empty()) h_ = {mpz_class(1)};
    // Bezout over GF(2) via the rational xgcd (coefficients stay 0/1 mod 2)
    {
        // extended euclid over GF(2)[x]
        ZPoly a = g_, b = h_;
        ZPoly sa{mpz_class(1)}, sb{}, ta{}, tb{mpz_class(1)};
        mpz_class two(2);
        while (!b.empty() && !(b.size() == 1 && b[0] == 0)) {
            auto [q, rem] = zpoly_divmod(a, b, two);  // b monic over GF(2)
            ZPoly s2 = zpoly_sub(sa, zpoly_mul(q, sb, two), two);
            ZPoly t2 = zpoly_sub(ta, zpoly_mul(q, tb, two), two);
            a = b;
            b = rem;
            znorm(b);
            sa = sb; sb = s2;
            ta = tb; tb = t2;
        }
        if (!(a.size() == 1 && a[0] == 1))
            throw std::logic_error("g, h not coprime mod 2");
        a_ = sa;
        b_ = ta;
    }
    ensure_precision(precision);
}

void TwoAdicChannel::ensure_precision(int s) const {
    while (s_ < s) {
        int ns = 2 * s_;
        mpz_class M2 = mpz_class(1) << ns;
        ZPoly f(K_->cyclotomic_poly().size());
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] = ((K_->cyclotomic_poly()[i] % M2) + M2) % M2;
        // Hensel step (von zur Gathen 15.10), h_ monic
        ZPoly e = zpoly_sub(f, zpoly_mul(g_, h_, M2), M2);
        auto [q, r] = zpoly_divmod(zpoly_mul(a_, e, M2), h_, M2);
        ZPoly gs = zpoly_add(zpoly_add(g_, zpoly_mul(b_, e, M2), M2),
                             zpoly_mul(q, g_, M2), M2);
        ZPoly hs = zpoly_add(h_, r, M2);
        ZPoly bb = zpoly_sub(
            zpoly_add(zpoly_mul(a_, gs, M2), zpoly_mul(b_, hs, M2), M2),
            ZPoly{mpz_class(1)}, M2);
        auto [cq, cd] = zpoly_divmod(zpoly_mul(a_, bb, M2), hs, M2);
        ZPoly as = zpoly_sub(a_, cd, M2);
        ZPoly bs = zpoly_sub(zpoly_sub(b_, zpoly_mul(b_, bb, M2), M2),
                             zpoly_mul(cq, gs, M2), M2);
        g_ = gs; h_ = hs; a_ = as; b_ = bs;
        s_ = ns;
        if (g_.empty() || g_.back() != 1 || h_.empty() || h_.back() != 1)
            throw std::logic_error("Hensel lift lost monicity");
    }
}

std::vector<mpz_class> TwoAdicChannel::rem_mod_g(std::vector<mpz_class> poly,
                                                 int s) const {
    mpz_class M = mpz_class(1) << s;
    for (auto& v : poly) v = ((v % M) + M) % M;
    znorm(poly);
    auto [q, r] = zpoly_divmod(poly, g_, M);
    return r;
}

std::optional<long> TwoAdicChannel::valuation(const Cyclo& y) const {
    if (y.is_zero()) return std::nullopt;
    // clear denominators: y = Y / (2^e2 * dodd)
    mpz_class den(1);
    for (const auto& v : y.c) den = lcm(den, v.get_den());
    long e2 = 0;
    mpz_class dodd = den;
    while (dodd % 2 == 0) { dodd /= 2; ++e2; }
    ZPoly Y(y.c.size());
    for (std::size_t i = 0; i < y.c.size(); ++i) {
        mpq_class t = y.c[i] * den;
        Y[i] = t.get_num();
    }
    for (;;) {
        ensure_precision(s_);
        mpz_class M = mpz_class(1) << s_;
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), dodd.get_mpz_t(), M.get_mpz_t()) == 0)
            throw std::logic_error("odd denominator not invertible mod 2^s");
        ZPoly Z = rem_mod_g(Y, s_);
        for (auto& v : Z) v = (v * dinv) % M;
        znorm(Z);
        long val = -1;
        for (const auto& v : Z) {
            if (v == 0) continue;
            long v2 = static_cast<long>(mpz_scan1(v.get_mpz_t(), 0));
            if (val < 0 || v2 < val) val = v2;
        }
        if (val >= 0 && val < s_ - 1) return val - e2;
        // ambiguous at this precision (element may be divisible by 2^s)
        if (s_ > 4096)
            throw std::runtime_error("2-adic valuation: precision exhausted");
        ensure_precision(2 * s_);
    }
}

std::optional<FElem> TwoAdicChannel::reduce(const Cyclo& y) const {
    if (y.is_zero()) return FElem(0);
    auto v = valuation(y);
    if (!v) return FElem(0);
    if (*v < 0) return std::nullopt;
    if (*v > 0) return FElem(0);
    // reconstruct the residue: same computation as valuation, then mod 2
    mpz_class den(1);
    for (const auto& q : y.c) den = lcm(den, q.get_den());
    long e2 = 0;
    mpz_class dodd = den;
    while (dodd % 2 == 0) { dodd /= 2; ++e2; }
    ensure_precision(std::max(s_, static_cast<int>(e2) + 2));
    mpz_class M = mpz_class(1) << s_;
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), dodd.get_mpz_t(), M.get_mpz_t());
    ZPoly Y(y.c.size());
    for (std::size_t i = 0; i < y.c.size(); ++i)
        Y[i] = mpq_class(y.c[i] * den).get_num();
    ZPoly Z = rem_mod_g(Y, s_);
    FElem result = 0;
    for (std::size_t i = 0; i < Z.size(); ++i) {
        mpz_class t = (Z[i] * dinv) % M;
        mpz_class shifted = t >> e2;
        if (mpz_odd_p(shifted.get_mpz_t()))
            result ^= F_->pow(F_->unity_root(), i);
    }
    return result;
}

std::optional<FElem> TwoAdicChannel::reduce_rational(const mpq_class& q) const {
    return reduce(K_->from_rational(q));
}

Cyclo TwoAdicChannel::brauer_lift(FElem x) const {
    if (x == 0) throw std::domain_error("brauer_lift of zero");
    FElem p = 1;
    for (std::uint64_t t = 0; t < K_->modulus(); ++t) {
        if (p == x) return K_->zeta(t);
        p = F_->mul(p, F_->unity_root());
    }
    throw std::domain_error("element is not a power of the fixed root of unity");
}

}  // namespace char2
