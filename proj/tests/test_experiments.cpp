#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ulab/experiments.hpp"

using namespace ulab;

namespace {

std::int64_t brute_theta_count(std::int64_t N, const LinearFormsPattern& p) {
    std::int64_t count = 0;
    for (std::int64_t m = 1; m <= N; ++m) {
        for (std::int64_t n = 1; n <= N; ++n) {
            if (m + p.l1 * n >= 1 && m + p.l1 * n <= N && m + p.l2 * n >= 1 && m + p.l2 * n <= N &&
                m + p.l3 * n >= 1 && m + p.l3 * n <= N) {
                ++count;
            }
        }
    }
    return count;
}

}  // namespace

TEST_CASE("averaging window pinned counts") {
    const LinearFormsPattern p123(1, 2, 3);
    CHECK(theta_set(10, p123).pairs.size() == 12);
    CHECK(theta_set(3, p123).pairs.empty());  // N < 1 + l3
}

TEST_CASE("averaging window agrees with the double-loop oracle") {
    const std::int64_t sizes[] = {5, 37, 120, 200};
    for (std::int64_t l1 = 1; l1 <= 5; ++l1) {
        for (std::int64_t l2 = 1; l2 <= 5; ++l2) {
            for (std::int64_t l3 = 1; l3 <= 5; ++l3) {
                if (l1 == l2 || l1 == l3 || l2 == l3) continue;
                const LinearFormsPattern p(l1, l2, l3);
                for (std::int64_t N : sizes) {
                    const auto t = theta_set(N, p);
                    CHECK(static_cast<std::int64_t>(t.pairs.size()) == brute_theta_count(N, p));
                    for (const auto& [m, n] : t.pairs) {
                        CHECK(m >= 1);
                        CHECK(n >= 1);
                        CHECK(m + p.l3 * n <= N);
                    }
                }
            }
        }
    }
}

TEST_CASE("window density stabilizes") {
    const LinearFormsPattern p(1, 2, 3);
    const double r500 = static_cast<double>(theta_set(500, p).pairs.size()) / (500.0 * 500.0);
    const double r1000 = static_cast<double>(theta_set(1000, p).pairs.size()) / (1000.0 * 1000.0);
    CHECK(std::abs(r500 - r1000) < 0.01);
    CHECK(r1000 > 0.0);
}

TEST_CASE("recurrence average pinned values") {
    const LinearFormsPattern p(1, 2, 3);
    CHECK(std::abs(recurrence_average(MultiplicativeFunction::one(), p, 200) - 1.0) < 1e-12);
    CHECK(std::abs(recurrence_average(MultiplicativeFunction::phase(0.0), p, 200) - 1.0) < 1e-12);
    CHECK_THROWS_AS(recurrence_average(MultiplicativeFunction::one(), p, 3), parameter_error);
}

TEST_CASE("degenerate pairs grow at most linearly") {
    const LinearFormsPattern p(1, 2, 3);
    for (std::int64_t N : {std::int64_t{500}, std::int64_t{1000}, std::int64_t{2000}}) {
        const std::int64_t count = degenerate_pair_count(p, N);
        CHECK(count <= 10 * N);
    }
}

TEST_CASE("mixture average equals the brute-force constrained count for the constant member") {
    const LinearFormsPattern p(1, 2, 3);
    const Modulus mod = select_modulus(10, p.ell());
    const std::vector<std::pair<MultiplicativeFunction, double>> w{{MultiplicativeFunction::one(), 1.0}};
    const cdouble avg = mixture_average(w, p, mod);
    // Brute force: (m, n) with n in [1, 10] and all four forms in [1, 10] mod ntilde;
    // since ntilde >> N no wrap-around contributes.
    std::int64_t count = 0;
    for (std::int64_t m = 1; m <= 10; ++m) {
        for (std::int64_t n = 1; n <= 10; ++n) {
            if (m + p.l1 * n <= 10 && m + p.l2 * n <= 10 && m + p.l3 * n <= 10) ++count;
        }
    }
    const double expect = static_cast<double>(count) / (static_cast<double>(mod.ntilde) * mod.ntilde);
    CHECK(std::abs(avg - expect) < 1e-12);
    CHECK(avg.real() > 0.0);

    const std::vector<std::pair<MultiplicativeFunction, double>> none{{MultiplicativeFunction::one(), 0.0}};
    CHECK(std::abs(mixture_average(none, p, mod)) == 0.0);
}

TEST_CASE("self-paired averages of the named members stay positive at N = 100") {
    const LinearFormsPattern p(1, 2, 3);
    const Modulus mod = select_modulus(100, p.ell());
    for (const auto& chi : {MultiplicativeFunction::one(), MultiplicativeFunction::minus_at_two(),
                            MultiplicativeFunction::character_like(3), MultiplicativeFunction::character_like(5)}) {
        const cdouble v = mixture_average({{chi, 1.0}}, p, mod);
        CHECK(v.real() > 0.0);
    }
}

TEST_CASE("truncated multiplicative Folner sets") {
    CHECK(folner_set(1, 3) == std::vector<BigInt>{1, 2, 4, 8});
    CHECK(folner_set(2, 1) == std::vector<BigInt>{1, 2, 3, 6});
    CHECK(folner_set(6, 6).size() == 117649);
    CHECK_THROWS_AS(folner_set(30, 9), size_error);
}

TEST_CASE("multiplicative density pinned values") {
    const auto odd = [](const BigInt& n) { return n % 2 != 0; };
    CHECK(multiplicative_density(odd, 6, 6) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
    CHECK(multiplicative_density([](const BigInt&) { return true; }, 6, 6) == 1.0);
}

TEST_CASE("dilation probe: density of 2E approaches density of E") {
    const auto in_E = [](const BigInt& n) { return n % 3 == 1; };
    const auto in_2E = [](const BigInt& n) { return n % 2 == 0 && (n / 2) % 3 == 1; };
    const double gap_small = std::abs(multiplicative_density(in_2E, 4, 2) - multiplicative_density(in_E, 4, 2));
    const double gap_large = std::abs(multiplicative_density(in_2E, 4, 40) - multiplicative_density(in_E, 4, 40));
    CHECK(gap_large < 0.15);
    CHECK(gap_large <= gap_small + 0.02);
}

TEST_CASE("density is monotone under coloring refinement") {
    // residue:4 refines residue:2; the max cell density can only drop.
    auto max_cell_density = [](const Coloring& c) {
        double best = 0;
        for (int cell = 0; cell < c.num_cells; ++cell) {
            best = std::max(best, multiplicative_density(
                                      [&](const BigInt& n) { return c.rule(n.convert_to<std::int64_t>()) == cell; },
                                      4, 4));
        }
        return best;
    };
    CHECK(max_cell_density(Coloring::residue(4)) <= max_cell_density(Coloring::residue(2)) + 1e-12);
}

TEST_CASE("coloring parsing and the 7-adic leading digit rule") {
    const auto c7 = Coloring::seven_adic();
    CHECK(c7.num_cells == 6);
    CHECK(c7.rule(1) == 0);
    CHECK(c7.rule(7) == 0);   // 7 = 7^1 * 1
    CHECK(c7.rule(8) == 0);   // 8 mod 7 = 1
    CHECK(c7.rule(13) == 5);  // 13 mod 7 = 6
    CHECK(c7.rule(98) == 1);  // 98 = 7^2 * 2

    CHECK(Coloring::parse("trivial").num_cells == 1);
    CHECK(Coloring::parse("residue:5").num_cells == 5);
    CHECK(Coloring::parse("7adic").num_cells == 6);
    CHECK_THROWS_AS(Coloring::parse("octal"), input_error);
}

TEST_CASE("monochromatic searches on the footnote equations") {
    // x^2 + y^2 = 3 n^2 has no solutions at all.
    CHECK(coloring_search(QuadraticForm{1, 1, -3, 0, 0, 0}, Coloring::trivial(), 500).empty());
    // x^2 + y^2 = 5 n^2 has solutions, but none monochromatic under the
    // 7-adic leading-digit coloring.
    CHECK(coloring_search(QuadraticForm{1, 1, -5, 0, 0, 0}, Coloring::seven_adic(), 1000).empty());
    CHECK_FALSE(coloring_search(QuadraticForm{1, 1, -5, 0, 0, 0}, Coloring::trivial(), 1000).empty());
}

TEST_CASE("monochromatic search finds hits for the square-coefficient form") {
    const auto hits = coloring_search(QuadraticForm{16, 9, -1, 0, 0, 0}, Coloring::trivial(), 200);
    REQUIRE_FALSE(hits.empty());
    for (const auto& h : hits) {
        CHECK(h.x != h.y);
        CHECK(h.n > 0);
        CHECK(16 * h.x * h.x + 9 * h.y * h.y == h.n * h.n);
    }
}

TEST_CASE("pattern box search reports exactly verified colored pairs") {
    const EllPattern tuple{1, 15, 10, 30};
    const auto hits = coloring_search(tuple, Coloring::residue(3), 3);
    for (const auto& h : hits) {
        CHECK(h.x != h.y);
        CHECK(h.x == h.k * h.m * (h.m + 15 * h.n));
        CHECK(h.y == h.k * (h.m + 10 * h.n) * (h.m + 30 * h.n));
        CHECK(h.x % 3 == h.y % 3);
        CHECK(h.cell == h.x % 3);
    }
}
