#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "char2/field.hpp"
#include "char2/gfmat.hpp"

namespace char2 {

/// Univariate polynomial over GF(2^k); coefficient i of x^i, no trailing
/// zeros (zero polynomial has empty coefficient vector).
struct GfPoly {
    const Field* F = nullptr;
    std::vector<FElem> c;

    GfPoly() = default;
    GfPoly(const Field* f, std::vector<FElem> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    FElem lead() const { return c.back(); }
    void normalize();
    GfPoly monic() const;

    bool operator==(const GfPoly& o) const { return c == o.c; }
    bool operator<(const GfPoly& o) const;  // degree, then coefficients

    static GfPoly zero(const Field* F) { return GfPoly(F, {}); }
    static GfPoly one(const Field* F) { return GfPoly(F, {1}); }
    static GfPoly x(const Field* F) { return GfPoly(F, {0, 1}); }
};

GfPoly poly_add(const GfPoly& a, const GfPoly& b);
GfPoly poly_mul(const GfPoly& a, const GfPoly& b);
// quotient and remainder by monic-normalizable divisor
std::pair<GfPoly, GfPoly> poly_divmod(const GfPoly& a, const GfPoly& b);
GfPoly poly_rem(const GfPoly& a, const GfPoly& b);
GfPoly poly_gcd(GfPoly a, GfPoly b);  // monic gcd
GfPoly poly_powmod(const GfPoly& base, std::uint64_t e, const GfPoly& mod);
GfPoly poly_derivative(const GfPoly& a);
FElem poly_eval(const GfPoly& a, FElem x);
// substitute matrix for the variable
GfMat poly_eval_mat(const GfPoly& a, const GfMat& A);

struct PolyFactor {
    GfPoly factor;
    int multiplicity;
};

// complete factorization into monic irreducibles, deterministically ordered
std::vector<PolyFactor> poly_factor(const GfPoly& f, std::mt19937_64& rng);

// minimal polynomial of a square matrix (monic)
GfPoly min_poly(const GfMat& A);

}  // namespace char2
