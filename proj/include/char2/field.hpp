#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace char2 {

// Element of GF(2^k), k <= 62, packed as a polynomial over GF(2) in the
// low k bits.
using FElem = std::uint64_t;

/// Splitting field GF(2^k) together with a fixed odd modulus m and a fixed
/// primitive m-th root of unity u.  k = ord_2(m), so m | 2^k - 1.
///
/// The defining polynomial is the lexicographically least primitive
/// polynomial of degree k (least integer encoding, constant term first) and
/// gamma is the least multiplicative generator, so all derived values are
/// reproducible run to run.
class Field {
public:
    static Field for_modulus(std::uint64_t m);

    int k() const { return k_; }
    std::uint64_t modulus() const { return m_; }
    std::uint64_t order() const { return q_; }   // 2^k
    std::uint64_t defining_poly() const { return poly_; }
    FElem gamma() const { return gamma_; }
    FElem unity_root() const { return u_; }      // primitive m-th root

    FElem add(FElem a, FElem b) const { return a ^ b; }
    FElem mul(FElem a, FElem b) const;
    FElem sqr(FElem a) const { return mul(a, a); }
    FElem pow(FElem a, std::uint64_t e) const;
    FElem inv(FElem a) const;
    // unique square root: x^(2^(k-1))
    FElem sqrt(FElem a) const;

    std::uint64_t elem_order(FElem a) const;

    bool operator==(const Field& o) const {
        return k_ == o.k_ && m_ == o.m_ && poly_ == o.poly_;
    }

private:
    Field() = default;
    int k_ = 1;
    std::uint64_t m_ = 1;
    std::uint64_t q_ = 2;
    std::uint64_t poly_ = 2;  // x
    FElem gamma_ = 1;
    FElem u_ = 1;
};

// n = n2 * nodd with n2 a power of two and nodd odd.  Throws on n == 0.
std::pair<std::uint64_t, std::int64_t> two_part(std::int64_t n);

// multiplicative order of 2 modulo odd m (1 when m == 1)
int ord2_mod(std::uint64_t m);

// factorization helpers (64-bit, Pollard rho)
std::vector<std::uint64_t> factor_u64(std::uint64_t n);

}  // namespace char2
