#include "ulab/quadforms.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace ulab {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

/// Reduced fraction with positive denominator.
struct Rational {
    BigInt num;
    BigInt den;

    Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
        if (den == 0) throw std::runtime_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const BigInt g = big_gcd(abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Poly2

void Poly2::add_term(const Key& k, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly2 Poly2::constant(BigInt c) { return monomial(std::move(c), 0, 0); }

Poly2 Poly2::monomial(BigInt c, int dm, int dn) {
    Poly2 p;
    p.add_term({dm, dn}, c);
    return p;
}

Poly2 Poly2::quadratic(BigInt A, BigInt B, BigInt C) {
    Poly2 p;
    p.add_term({2, 0}, A);
    p.add_term({1, 1}, B);
    p.add_term({0, 2}, C);
    return p;
}

Poly2 Poly2::linear(BigInt u, BigInt v) {
    Poly2 p;
    p.add_term({1, 0}, u);
    p.add_term({0, 1}, v);
    return p;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
    return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 out;
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : o.terms_) {
            out.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
        }
    }
    return out;
}

Poly2 Poly2::operator*(const BigInt& c) const {
    Poly2 out;
    for (const auto& [k, v] : terms_) out.add_term(k, v * c);
    return out;
}

Poly2 Poly2::operator-() const { return *this * BigInt(-1); }

Poly2 Poly2::substitute(const Poly2& mm, const Poly2& nn) const {
    Poly2 out;
    for (const auto& [k, c] : terms_) {
        Poly2 term = Poly2::constant(c);
        for (int i = 0; i < k.first; ++i) term = term * mm;
        for (int i = 0; i < k.second; ++i) term = term * nn;
        out = out + term;
    }
    return out;
}

BigInt Poly2::eval(const BigInt& m, const BigInt& n) const {
    BigInt out = 0;
    for (const auto& [k, c] : terms_) {
        BigInt term = c;
        for (int i = 0; i < k.first; ++i) term *= m;
        for (int i = 0; i < k.second; ++i) term *= n;
        out += term;
    }
    return out;
}

bool Poly2::is_zero() const { return terms_.empty(); }

BigInt Poly2::content() const {
    BigInt g = 0;
    for (const auto& [k, c] : terms_) g = big_gcd(g, abs(c));
    return g;
}

Poly2 Poly2::divide_exact(const BigInt& g) const {
    if (g == 0) throw std::runtime_error("Poly2: division by zero");
    Poly2 out;
    for (const auto& [k, c] : terms_) {
        if (c % g != 0) throw std::runtime_error("Poly2: inexact coefficient division");
        out.add_term(k, c / g);
    }
    return out;
}

BigInt Poly2::coeff(int dm, int dn) const {
    auto it = terms_.find({dm, dn});
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::string Poly2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest m-degree first, then highest n-degree.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const BigInt mag = abs(c);
        const bool unit = (mag == 1) && (k.first + k.second > 0);
        if (!unit) os << mag;
        if (k.first > 0) os << "m" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) os << "n" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// QuadraticForm

BigInt QuadraticForm::eval(const BigInt& x, const BigInt& y, const BigInt& z) const {
    return a * x * x + b * y * y + c * z * z + d * x * y + e * x * z + f * y * z;
}

Poly2 QuadraticForm::eval_poly(const Poly2& x, const Poly2& y, const Poly2& z) const {
    return x * x * a + y * y * b + z * z * c + x * y * d + x * z * e + y * z * f;
}

std::string QuadraticForm::to_string() const {
    std::ostringstream os;
    os << a << "x^2 + " << b << "y^2 + " << c << "z^2";
    if (d != 0) os << " + " << d << "xy";
    if (e != 0) os << " + " << e << "xz";
    if (f != 0) os << " + " << f << "yz";
    return os.str();
}

Discriminants discriminants(const QuadraticForm& p) {
    Discriminants out;
    out.d1 = p.e * p.e - 4 * p.a * p.c;
    out.d2 = p.f * p.f - 4 * p.b * p.c;
    out.d3 = (p.e + p.f) * (p.e + p.f) - 4 * p.c * (p.a + p.b + p.d);
    return out;
}

HypothesisStatus check_hypothesis(const QuadraticForm& p) {
    const auto deltas = discriminants(p);
    auto fail = [](std::string why) { return HypothesisStatus{false, std::move(why)}; };
    if (p.a <= 0) return fail("a must be positive");
    if (p.b <= 0) return fail("b must be positive");
    if (p.c >= 0) return fail("c must be negative");
    const std::array<std::pair<const BigInt*, const char*>, 3> checks{
        {{&deltas.d1, "Delta_1"}, {&deltas.d2, "Delta_2"}, {&deltas.d3, "Delta_3"}}};
    for (const auto& [delta, name] : checks) {
        if (*delta == 0) return fail(std::string(name) + " is zero");
        if (!integer_sqrt_if_square(*delta)) {
            std::ostringstream os;
            os << name << " = " << *delta << " is not a square";
            return fail(os.str());
        }
    }
    return HypothesisStatus{true, "SATISFIED"};
}

namespace {

BaseSolution base_solution_candidate(const QuadraticForm& p, const BigInt& sx, const BigInt& sz) {
    BaseSolution out;
    out.x0 = 2 * p.a * p.c + 2 * p.c * p.d - p.e * p.e - p.e * p.f + p.e * sx;
    out.y0 = -2 * p.a * p.c;
    out.z0 = p.a * (p.e + p.f + sz);
    return out;
}

}  // namespace

BaseSolution base_solution(const QuadraticForm& p) {
    const auto status = check_hypothesis(p);
    if (!status.satisfied) throw hypothesis_error("base_solution: " + status.diagnosis);
    const BigInt s = *integer_sqrt_if_square(discriminants(p).d3);
    for (const auto& [sx, sz] : std::array<std::pair<BigInt, BigInt>, 4>{
             {{s, s}, {s, -s}, {-s, -s}, {-s, s}}}) {
        const auto cand = base_solution_candidate(p, sx, sz);
        if (p.eval(cand.x0, cand.y0, cand.z0) == 0) return cand;
    }
    throw std::runtime_error("base_solution: internal factorization error (no sign choice solves p = 0)");
}

Poly2 ParametricFamily::x_poly() const { return Poly2::quadratic(x_coeffs[0], x_coeffs[1], x_coeffs[2]); }
Poly2 ParametricFamily::y_poly() const { return Poly2::quadratic(y_coeffs[0], y_coeffs[1], y_coeffs[2]); }
Poly2 ParametricFamily::z_poly() const { return Poly2::quadratic(z_coeffs[0], z_coeffs[1], z_coeffs[2]); }

namespace {

ParametricFamily family_from_base(const QuadraticForm& p, const BaseSolution& base) {
    ParametricFamily fam;
    fam.x_coeffs = {-(p.a * base.x0 + p.d * base.y0 + p.e * base.z0), -(2 * p.b * base.y0 + p.f * base.z0),
                    p.b * base.x0};
    fam.y_coeffs = {p.a * base.y0, -(2 * p.a * base.x0 + p.e * base.z0),
                    -(p.b * base.y0 + p.d * base.x0 + p.f * base.z0)};
    fam.z_coeffs = {base.z0 * p.a, base.z0 * p.d, base.z0 * p.b};
    return fam;
}

}  // namespace

ParametricFamily parametric_family(const QuadraticForm& p) {
    const auto fam = family_from_base(p, base_solution(p));
    if (!p.eval_poly(fam.x_poly(), fam.y_poly(), fam.z_poly()).is_zero()) {
        throw std::runtime_error("parametric_family: expansion of p over the family is not identically zero");
    }
    return fam;
}

namespace {

/// The two integer offsets u with A(m + u1 n)(m + u2 n) = Q(m, L n), i.e.
/// u = -L * root for the two rational roots of A r^2 - B r + ... careful:
/// roots of Q(m, n)/n^2 in r = m/n are (-B +/- s) / (2A).
std::array<Rational, 2> rational_roots(const BigInt& A, const BigInt& B, const BigInt& C) {
    const BigInt disc = B * B - 4 * A * C;
    const auto s = integer_sqrt_if_square(disc);
    if (!s || *s == 0) {
        throw std::runtime_error("normalize_to_ell: internal factorization error (discriminant not a non-zero square)");
    }
    return {Rational(-B + *s, 2 * A), Rational(-B - *s, 2 * A)};
}

}  // namespace

std::pair<EllPattern, NormalizationCertificate> normalize_to_ell(const QuadraticForm& p) {
    const auto status = check_hypothesis(p);
    if (!status.satisfied) throw hypothesis_error("normalize_to_ell: " + status.diagnosis);

    // A base solution for which Q1 and Q2 share the leading coefficient a*y0.
    const BigInt s = *integer_sqrt_if_square(discriminants(p).d3);
    ParametricFamily fam;
    bool found = false;
    for (const auto& [sx, sz] : std::array<std::pair<BigInt, BigInt>, 4>{
             {{s, s}, {s, -s}, {-s, -s}, {-s, s}}}) {
        const auto cand = base_solution_candidate(p, sx, sz);
        if (p.eval(cand.x0, cand.y0, cand.z0) != 0) continue;
        const auto f = family_from_base(p, cand);
        if (f.x_coeffs[0] == f.y_coeffs[0] && f.x_coeffs[0] > 0) {
            fam = f;
            found = true;
            break;
        }
    }
    if (!found) {
        throw std::runtime_error("normalize_to_ell: internal factorization error (no base with equal leading coefficients)");
    }

    const BigInt A = fam.x_coeffs[0];
    const auto x_roots = rational_roots(A, fam.x_coeffs[1], fam.x_coeffs[2]);
    const auto y_roots = rational_roots(A, fam.y_coeffs[1], fam.y_coeffs[2]);
    BigInt L = 1;
    for (const auto& r : {x_roots[0], x_roots[1], y_roots[0], y_roots[1]}) L = big_lcm(L, r.den);

    // Offsets after n -> sigma L n: Q = A (m + u1 n)(m + u2 n) with
    // u = -sigma L root. The shift m -> m - t n needs the global minimum t
    // to lie in the x-pair; the n -> -n orientation is the fallback.
    EllPattern pattern;
    Poly2 z_final;
    bool oriented = false;
    for (int sigma : {1, -1}) {
        auto offset = [&](const Rational& r) { return -sigma * L * r.num / r.den; };
        BigInt ux1 = offset(x_roots[0]), ux2 = offset(x_roots[1]);
        BigInt uy1 = offset(y_roots[0]), uy2 = offset(y_roots[1]);
        if (ux1 > ux2) std::swap(ux1, ux2);
        if (uy1 > uy2) std::swap(uy1, uy2);
        if (ux1 > uy1) continue;  // minimal offset outside the x-pair
        const BigInt t = ux1;
        pattern.ell0 = A;
        pattern.ell1 = ux2 - t;
        pattern.ell2 = uy1 - t;
        pattern.ell3 = uy2 - t;
        z_final = fam.z_poly().substitute(Poly2::linear(1, -t), Poly2::linear(0, sigma * L));
        oriented = true;
        break;
    }
    if (!oriented) {
        throw std::runtime_error("normalize_to_ell: internal factorization error (minimal offset never in the x-pair)");
    }

    // Strip the content shared by ell0 and the z polynomial; allowed by
    // homogeneity of p.
    const BigInt g = big_gcd(pattern.ell0, z_final.content());
    if (g > 1) {
        pattern.ell0 /= g;
        z_final = z_final.divide_exact(g);
    }

    const Poly2 x_target =
        Poly2::linear(1, 0) * Poly2::linear(1, pattern.ell1) * pattern.ell0;
    const Poly2 y_target =
        Poly2::linear(1, pattern.ell2) * Poly2::linear(1, pattern.ell3) * pattern.ell0;

    NormalizationCertificate cert;
    cert.z_poly = z_final;
    cert.symbolic_zero = p.eval_poly(x_target, y_target, z_final).is_zero();
    for (BigInt k = -5; k <= 5; ++k) {
        for (BigInt m = -20; m <= 20; ++m) {
            for (BigInt n = -20; n <= 20; ++n) {
                const BigInt x = k * x_target.eval(m, n);
                const BigInt y = k * y_target.eval(m, n);
                const BigInt z = k * z_final.eval(m, n);
                if (p.eval(x, y, z) != 0) {
                    throw std::runtime_error("normalize_to_ell: certificate box check failed");
                }
                ++cert.box_checks;
            }
        }
    }
    if (pattern.ell2 == pattern.ell3) {
        throw std::runtime_error("normalize_to_ell: internal factorization error (ell2 == ell3)");
    }
    if (pattern.ell1 == pattern.ell2 || pattern.ell1 == pattern.ell3) {
        cert.degeneracy_flags.push_back("ell1 collides with a y-side offset");
    }
    if (pattern.ell2 == 0 || pattern.ell3 == 0) {
        cert.degeneracy_flags.push_back("a y-side offset is zero (shares the m factor with x)");
    }
    return {pattern, cert};
}

IdentityReport verify_worked_identities() {
    IdentityReport report;
    {
        const Poly2 m = Poly2::linear(1, 0);
        const Poly2 x = m * Poly2::linear(1, 3);
        const Poly2 y = Poly2::linear(1, 1) * Poly2::linear(1, -3);
        const Poly2 z = Poly2::quadratic(5, 6, 9);
        report.pythagorean_like = (x * x * BigInt(16) + y * y * BigInt(9) - z * z).is_zero();
    }
    {
        const Poly2 m = Poly2::linear(1, 0);
        const Poly2 x = m * Poly2::linear(1, 2);
        const Poly2 y = Poly2::linear(1, -1) * Poly2::linear(1, 1);
        const Poly2 z = Poly2::quadratic(1, 1, 1);
        report.xy_mixed = (x * x + y * y - x * y - z * z).is_zero();
    }
    return report;
}

}  // namespace ulab
