#include "char2/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace char2 {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<__uint128_t>(a) * b) % n);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, n);
        a = mulmod_u64(a, a, n);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) {
            return (mulmod_u64(x, x, n) + c) % n;
        };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) { d = n; break; }
            d = std::__gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out.push_back(n); return; }
    std::uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

// multiplication of GF(2) polynomials packed in words, degrees < 63
__uint128_t clmul(std::uint64_t a, std::uint64_t b) {
    __uint128_t r = 0;
    while (b) {
        int i = __builtin_ctzll(b);
        r ^= static_cast<__uint128_t>(a) << i;
        b &= b - 1;
    }
    return r;
}

std::uint64_t reduce_poly(__uint128_t v, std::uint64_t poly, int k) {
    for (int i = 125; i >= k; --i) {
        if ((v >> i) & 1) v ^= static_cast<__uint128_t>(poly) << (i - k);
    }
    return static_cast<std::uint64_t>(v);
}

bool poly_irreducible(std::uint64_t f, int k) {
    // x^(2^k) == x mod f and gcd conditions via x^(2^(k/p)) != x
    auto sq = [&](std::uint64_t a) { return reduce_poly(clmul(a, a), f, k); };
    std::uint64_t x = 2 % (1ull << k);
    if (k == 1) return true;
    // frobenius iterates
    std::uint64_t t = x;
    for (int i = 0; i < k; ++i) t = sq(t);
    if (t != x) return false;
    for (std::uint64_t p : factor_u64(static_cast<std::uint64_t>(k))) {
        std::uint64_t s = x;
        for (std::uint64_t i = 0; i < k / p; ++i) s = sq(s);
        if (s == x) return false;
    }
    return true;
}

}  // namespace

std::vector<std::uint64_t> factor_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int ord2_mod(std::uint64_t m) {
    if (m == 1) return 1;
    if (m % 2 == 0) throw std::invalid_argument("modulus must be odd");
    int k = 1;
    std::uint64_t t = 2 % m;
    while (t != 1) {
        t = (t * 2) % m;
        ++k;
        if (k > 64) throw std::runtime_error("ord2_mod: modulus too large");
    }
    return k;
}

FElem Field::mul(FElem a, FElem b) const {
    return reduce_poly(clmul(a, b), poly_, k_);
}

FElem Field::pow(FElem a, std::uint64_t e) const {
    FElem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FElem Field::inv(FElem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, q_ - 2);
}

FElem Field::sqrt(FElem a) const {
    FElem r = a;
    for (int i = 0; i < k_ - 1; ++i) r = mul(r, r);
    return r;
}

std::uint64_t Field::elem_order(FElem a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t p : factor_u64(q_ - 1)) {
        while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
    }
    return ord;
}

Field Field::for_modulus(std::uint64_t m) {
    if (m == 0 || m % 2 == 0)
        throw std::invalid_argument("modulus must be odd and positive");
    Field F;
    F.m_ = m;
    F.k_ = ord2_mod(m);
    if (F.k_ > 62) throw std::runtime_error("field degree too large");
    F.q_ = 1ull << F.k_;

    if (F.k_ == 1) {
        F.poly_ = 0b11;  // x + 1
        F.gamma_ = 1;
        F.u_ = 1;
        return F;
    }

    auto primes = factor_u64(F.q_ - 1);
    // least primitive defining polynomial: x is a generator mod f
    for (std::uint64_t f = (1ull << F.k_) + 1;; f += 2) {
        if (!poly_irreducible(f, F.k_)) continue;
        Field cand = F;
        cand.poly_ = f;
        FElem x = 2;
        bool primitive = true;
        for (std::uint64_t p : primes) {
            if (cand.pow(x, (cand.q_ - 1) / p) == 1) { primitive = false; break; }
        }
        if (primitive) { F.poly_ = f; break; }
    }
    // least multiplicative generator
    for (FElem g = 2;; ++g) {
        bool primitive = true;
        for (std::uint64_t p : primes) {
            if (F.pow(g, (F.q_ - 1) / p) == 1) { primitive = false; break; }
        }
        if (primitive) { F.gamma_ = g; break; }
    }
    F.u_ = F.pow(F.gamma_, (F.q_ - 1) / m);
    return F;
}

std::pair<std::uint64_t, std::int64_t> two_part(std::int64_t n) {
    if (n == 0) throw std::invalid_argument("two_part of zero");
    std::uint64_t n2 = 1;
    while (n % 2 == 0) { n /= 2; n2 *= 2; }
    return {n2, n};
}

}  // namespace char2
