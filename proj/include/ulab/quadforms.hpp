#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ulab/core_ring.hpp"

namespace ulab {

/// Sparse bivariate polynomial in (m, n) with exact integer coefficients.
class Poly2 {
public:
    using Key = std::pair<int, int>;  // (degree in m, degree in n)

    Poly2() = default;
    static Poly2 constant(BigInt c);
    static Poly2 monomial(BigInt c, int dm, int dn);
    /// A m^2 + B mn + C n^2.
    static Poly2 quadratic(BigInt A, BigInt B, BigInt C);
    /// u m + v n.
    static Poly2 linear(BigInt u, BigInt v);

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(const BigInt& c) const;
    Poly2 operator-() const;

    /// Substitutes m -> mm, n -> nn (polynomial composition).
    Poly2 substitute(const Poly2& mm, const Poly2& nn) const;

    BigInt eval(const BigInt& m, const BigInt& n) const;
    bool is_zero() const;
    /// gcd of all coefficients; 0 for the zero polynomial.
    BigInt content() const;
    Poly2 divide_exact(const BigInt& g) const;
    BigInt coeff(int dm, int dn) const;
    const std::map<Key, BigInt>& terms() const { return terms_; }
    std::string to_string() const;

private:
    std::map<Key, BigInt> terms_;
    void add_term(const Key& k, const BigInt& c);
};

/// a x^2 + b y^2 + c z^2 + d xy + e xz + f yz.
struct QuadraticForm {
    BigInt a, b, c, d, e, f;

    BigInt eval(const BigInt& x, const BigInt& y, const BigInt& z) const;
    /// Substitutes polynomials for x, y, z and expands.
    Poly2 eval_poly(const Poly2& x, const Poly2& y, const Poly2& z) const;
    std::string to_string() const;
};

struct Discriminants {
    BigInt d1, d2, d3;  // e^2-4ac, f^2-4bc, (e+f)^2-4c(a+b+d)
};

Discriminants discriminants(const QuadraticForm& p);

struct HypothesisStatus {
    bool satisfied = false;
    std::string diagnosis;  // "SATISFIED" or the first failed condition
};

/// a > 0, b > 0, c < 0, and all three discriminants non-zero perfect squares.
HypothesisStatus check_hypothesis(const QuadraticForm& p);

struct BaseSolution {
    BigInt x0, y0, z0;
};

/// x0 = 2ac+2cd-e^2-ef+e s, y0 = -2ac, z0 = a(e+f+s) with s^2 = Delta_3; the
/// sign of s in x0 and z0 is chosen so that p(x0,y0,z0) = 0 exactly.
BaseSolution base_solution(const QuadraticForm& p);

/// x = k(x2 m^2 + x1 mn + x0 n^2), similarly y, z; p(x,y,z) vanishes
/// identically.
struct ParametricFamily {
    std::array<BigInt, 3> x_coeffs, y_coeffs, z_coeffs;  // (m^2, mn, n^2)

    Poly2 x_poly() const;
    Poly2 y_poly() const;
    Poly2 z_poly() const;
};

ParametricFamily parametric_family(const QuadraticForm& p);

struct EllPattern {
    BigInt ell0, ell1;  // positive
    BigInt ell2, ell3;  // non-negative, distinct
};

struct NormalizationCertificate {
    Poly2 z_poly;                            // exact z with p(x, y, z) = 0
    bool symbolic_zero = false;              // expansion of p(x,y,z) vanished
    long box_checks = 0;                     // exact evaluations performed
    std::vector<std::string> degeneracy_flags;
};

/// Reduces the parametric family to x = k l0 m (m + l1 n),
/// y = k l0 (m + l2 n)(m + l3 n): factor the two quadratics over Q, clear
/// denominators with n -> Ln, shift m by the minimal offset (negating n if
/// the minimal offset falls outside the x-pair), then strip the common
/// content shared with the z polynomial.
std::pair<EllPattern, NormalizationCertificate> normalize_to_ell(const QuadraticForm& p);

struct IdentityReport {
    bool pythagorean_like = false;  // 16(km(m+3n))^2 + 9(k(m+n)(m-3n))^2 = (k(5m^2+6mn+9n^2))^2
    bool xy_mixed = false;          // x^2+y^2-xy = z^2 for the displayed family
};

/// Exact symbolic verification of the two worked solution-family identities.
IdentityReport verify_worked_identities();

}  // namespace ulab
