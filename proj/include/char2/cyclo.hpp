#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "char2/field.hpp"

namespace char2 {

/// Element of Q(zeta_m), as a rational polynomial of degree < phi(m) in
/// the power basis of zeta_m.  All arithmetic is exact.
struct Cyclo {
    std::vector<mpq_class> c;

    bool is_zero() const;
    bool is_rational() const;
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }
    std::string str() const;  // human readable, z = zeta_m
};

/// The cyclotomic field Q[x]/(Phi_m(x)).
class CycloField {
public:
    explicit CycloField(std::uint64_t m);

    std::uint64_t modulus() const { return m_; }
    int degree() const { return deg_; }
    const std::vector<mpz_class>& cyclotomic_poly() const { return phi_; }

    Cyclo zero() const;
    Cyclo one() const { return from_int(1); }
    Cyclo from_int(long v) const;
    Cyclo from_rational(const mpq_class& v) const;
    Cyclo zeta(std::uint64_t power) const;  // zeta_m^power

    Cyclo add(const Cyclo& a, const Cyclo& b) const;
    Cyclo sub(const Cyclo& a, const Cyclo& b) const;
    Cyclo mul(const Cyclo& a, const Cyclo& b) const;
    Cyclo neg(const Cyclo& a) const;
    Cyclo inv(const Cyclo& a) const;
    Cyclo scale(const Cyclo& a, const mpq_class& s) const;
    // complex conjugation, zeta -> zeta^{-1}
    Cyclo conj(const Cyclo& a) const;
    std::optional<mpq_class> as_rational(const Cyclo& a) const;

private:
    Cyclo reduce(std::vector<mpq_class> poly) const;

    std::uint64_t m_;
    int deg_;
    std::vector<mpz_class> phi_;
    // x^(deg+i) mod Phi_m for i = 0..deg-2, to speed multiplication
    std::vector<std::vector<mpq_class>> powers_;
};

/// Square matrix utilities over Q(zeta_m); used for the Brauer table.
class CycloMat {
public:
    CycloMat(const CycloField* K, int rows, int cols);
    const CycloField* field() const { return K_; }
    int rows() const { return nr_; }
    int cols() const { return nc_; }
    Cyclo& at(int i, int j) { return e_[static_cast<std::size_t>(i) * nc_ + j]; }
    const Cyclo& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * nc_ + j];
    }
    CycloMat inverse() const;  // throws std::domain_error when singular
    Cyclo determinant() const;
    CycloMat operator*(const CycloMat& o) const;

private:
    const CycloField* K_;
    int nr_, nc_;
    std::vector<Cyclo> e_;
};

/// 2-adic reduction channel: Z[zeta_m] localized at a fixed prime above 2,
/// mapping onto GF(2^k) with zeta_m -> u.  Carries a Hensel lift of the
/// minimal polynomial of u to modulus 2^s; precision grows on demand.
class TwoAdicChannel {
public:
    TwoAdicChannel(const CycloField* K, const Field* F, int precision = 32);

    const CycloField* cyclo() const { return K_; }
    const Field* field() const { return F_; }
    int precision() const { return s_; }
    const std::vector<mpz_class>& lifted_poly() const { return g_; }

    // image in GF(2^k); nullopt when the valuation is negative
    std::optional<FElem> reduce(const Cyclo& y) const;
    std::optional<FElem> reduce_rational(const mpq_class& q) const;
    // 2-adic valuation at the chosen prime; nullopt only when y == 0
    std::optional<long> valuation(const Cyclo& y) const;

    // multiplicative lift of a nonzero field element of odd order into the
    // group generated by zeta_m
    Cyclo brauer_lift(FElem x) const;

private:
    void ensure_precision(int s) const;
    // reduce integer poly mod (2^s, g); returns coefficient vector
    std::vector<mpz_class> rem_mod_g(std::vector<mpz_class> poly, int s) const;

    const CycloField* K_;
    const Field* F_;
    mutable int s_;
    mutable std::vector<mpz_class> g_, h_, a_, b_;  // f = g*h, a*g + b*h = 1 (mod 2^s)
};

}  // namespace char2
