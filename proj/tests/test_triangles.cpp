#include "stirconv/triangles.hpp"

#include <catch2/catch.hpp>

using namespace stirconv;

namespace {

/// Restores the recurrence route even if a section fails.
struct TriangleSourceGuard {
    explicit TriangleSourceGuard(TriangleSource source) { set_triangle_source(source); }
    ~TriangleSourceGuard() { set_triangle_source(TriangleSource::Recurrence); }
};

}  // namespace

TEST_CASE("Stirling numbers of the second kind") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(2, 5) == 0);
    // row 4: 0, 1, 7, 6, 1
    CHECK(triangle_row(TriangleKind::Stirling2, 4) ==
          std::vector<ExactInt>{0, 1, 7, 6, 1});
    for (std::size_t n = 1; n <= 40; ++n) {
        CHECK(stirling2(n, n) == 1);
        CHECK(stirling2(n, 0) == 0);
    }
}

TEST_CASE("Stirling numbers of the first kind, signed and unsigned") {
    CHECK(stirling1_signed(3, 2) == -3);
    CHECK(stirling1_signed(4, 3) == -6);
    CHECK(stirling1_signed(5, 5) == 1);
    CHECK(stirling1_unsigned(3, 2) == 3);
    CHECK(stirling1_unsigned(0, 0) == 1);
    CHECK(stirling1_unsigned(4, 1) == 6);
    CHECK(triangle_row(TriangleKind::StirlingSigned, 4) ==
          std::vector<ExactInt>{0, -6, 11, -6, 1});

    // the two triangles come from separate recurrences; the sign relation
    // |s(n,k)| = (-1)^(n-k) s(n,k) ties them together
    for (std::size_t n = 0; n <= 40; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            ExactInt expected = stirling1_signed(n, k);
            if ((n - k) % 2 == 1) expected = -expected;
            CHECK(stirling1_unsigned(n, k) == expected);
            CHECK(stirling1_unsigned(n, k) >= 0);
        }
        CHECK(stirling1_signed(n, n) == 1);
    }
    // |s(n,1)| = (n-1)!; column 0 vanishes above the apex for both kinds
    for (std::size_t n = 1; n <= 20; ++n) {
        CHECK(stirling1_unsigned(n, 1) == factorial(n - 1));
        CHECK(stirling1_signed(n, 0) == 0);
        CHECK(stirling1_unsigned(n, 0) == 0);
    }
}

TEST_CASE("Lah numbers") {
    CHECK(lah(4, 1) == 24);
    CHECK(lah(0, 0) == 1);
    CHECK(lah(2, 1) == 2);
    CHECK(lah(3, 5) == 0);
    CHECK(triangle_row(TriangleKind::Lah, 4) == std::vector<ExactInt>{0, 24, 36, 12, 1});
    for (std::size_t n = 1; n <= 30; ++n) {
        CHECK(lah(n, 0) == 0);
        CHECK(lah(n, 1) == factorial(n));
        CHECK(lah(n, n) == 1);
    }
    // L(n,k) = sum_j |s(n,j)| S(j,k)
    for (std::size_t n = 0; n <= 30; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            ExactInt conv(0);
            for (std::size_t j = 0; j <= n; ++j) conv += stirling1_unsigned(n, j) * stirling2(j, k);
            CHECK(lah(n, k) == conv);
        }
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binom_int(4, 2) == 6);
    CHECK(binom_int(17, 0) == 1);
    CHECK(binom_int(2, 3) == 0);
    for (long long n = 0; n <= 30; ++n) {
        for (long long k = 0; k <= n; ++k) {
            CHECK(generalized_binomial(ExactRational(n), static_cast<std::size_t>(k)) ==
                  ExactRational(binom_int(n, k)));
        }
    }
}

TEST_CASE("Bell numbers and exponential polynomials") {
    CHECK(bell(0) == 1);
    CHECK(bell(3) == 5);
    CHECK(bell(4) == 15);
    std::vector<ExactInt> first = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (std::size_t n = 0; n < first.size(); ++n) CHECK(bell(n) == first[n]);

    CHECK(exp_poly(0) == Polynomial({ExactRational(1)}));
    CHECK(exp_poly(2) == Polynomial({ExactRational(0), ExactRational(1), ExactRational(1)}));
    CHECK(exp_poly(3) ==
          Polynomial({ExactRational(0), ExactRational(1), ExactRational(3), ExactRational(1)}));

    CHECK(exp_poly_eval(4, ExactRational(1)) == ExactRational(15));
    CHECK(exp_poly_eval(0, ExactRational(-17, 3)) == ExactRational(1));
    CHECK(exp_poly_eval(2, ExactRational(1, 2)) == ExactRational(3, 4));

    // phi_n(1) = b_n = row sum, through n = 40
    for (std::size_t n = 0; n <= 40; ++n) {
        CHECK(exp_poly_eval(n, ExactRational(1)) == ExactRational(bell(n)));
        ExactInt row_sum(0);
        for (const ExactInt& e : triangle_row(TriangleKind::Stirling2, n)) row_sum += e;
        CHECK(bell(n) == row_sum);
    }
}

TEST_CASE("polynomials trim trailing zeros") {
    Polynomial trimmed({ExactRational(1), ExactRational(2), ExactRational(0), ExactRational(0)});
    CHECK(trimmed.degree() == 1);
    CHECK(trimmed.coeffs().back() == ExactRational(2));
    CHECK(trimmed.coeff(9) == ExactRational(0));

    Polynomial zero({ExactRational(0), ExactRational(0)});
    CHECK(zero.is_zero());
    CHECK(zero == Polynomial());
    CHECK(zero(ExactRational(5, 3)) == ExactRational(0));
}

TEST_CASE("Laguerre polynomials") {
    CHECK(laguerre(0, 2, ExactRational(9, 7)) == ExactRational(1));
    CHECK(laguerre(1, 0, ExactRational(-1)) == ExactRational(2));
    CHECK(laguerre(2, -1, ExactRational(-1)) == ExactRational(3, 2));
    CHECK_THROWS_AS(laguerre(3, -2, ExactRational(1)), std::domain_error);
}

TEST_CASE("Laguerre sum matches generating-function extraction") {
    // (1-t)^(-q-1) e^(-x t/(1-t)) = sum_n L_n^{(q)}(x) t^n
    for (int q : {-1, 0, 1, 2, 3}) {
        for (ExactRational x : {ExactRational(-1), ExactRational(-1, 2), ExactRational(2)}) {
            const std::size_t order = 12;
            std::vector<ExactRational> pre(order + 1);
            for (std::size_t n = 0; n <= order; ++n) {
                pre[n] = generalized_binomial(ExactRational(q) + ExactRational(n), n);
            }
            Series prefactor = Series::from_coeffs(Flavor::OGF, std::move(pre));
            Series argument = scaled_geometric_argument(-x, ExactRational(1), order, Flavor::OGF);
            Series gf = prefactor * series_exp(argument);
            for (std::size_t n = 0; n <= order; ++n) {
                CAPTURE(n, q, x.str());
                CHECK(laguerre(n, q, x) == gf.coeff(n));
            }
        }
    }
}

TEST_CASE("triangles match generating-function extraction") {
    for (std::size_t p = 0; p <= 8; ++p) {
        Series s2 = kernel_gf(KernelKind::Stirling2, p, 16);
        Series s1 = kernel_gf(KernelKind::Stirling1, p, 16);
        Series lh = kernel_gf(KernelKind::Lah, p, 16);
        Series bc = kernel_gf(KernelKind::BinomCol, p, 16);
        for (std::size_t n = 0; n <= 16; ++n) {
            CAPTURE(n, p);
            CHECK(s2.sequence_term(n) == ExactRational(stirling2(n, p)));
            CHECK(s1.sequence_term(n) == ExactRational(stirling1_signed(n, p)));
            CHECK(lh.sequence_term(n) == ExactRational(lah(n, p)));
            CHECK(bc.sequence_term(n) == ExactRational(binom_int(n, p)));
        }
    }
}

TEST_CASE("generating-function triangle source agrees with the recurrences") {
    std::vector<std::vector<ExactInt>> expected;
    for (std::size_t n = 0; n <= 12; ++n) {
        expected.push_back(triangle_row(TriangleKind::Stirling2, n));
        expected.push_back(triangle_row(TriangleKind::StirlingSigned, n));
        expected.push_back(triangle_row(TriangleKind::StirlingUnsigned, n));
        expected.push_back(triangle_row(TriangleKind::Lah, n));
    }

    TriangleSourceGuard guard(TriangleSource::GeneratingFunction);
    CHECK(triangle_source() == TriangleSource::GeneratingFunction);
    std::size_t i = 0;
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(triangle_row(TriangleKind::Stirling2, n) == expected[i++]);
        CHECK(triangle_row(TriangleKind::StirlingSigned, n) == expected[i++]);
        CHECK(triangle_row(TriangleKind::StirlingUnsigned, n) == expected[i++]);
        CHECK(triangle_row(TriangleKind::Lah, n) == expected[i++]);
    }
    CHECK(binom_int(12, 5) == 792);
}

TEST_CASE("triangle rows have n + 1 entries and are never evicted") {
    TriangleCache cache(TriangleKind::Stirling2);
    CHECK(cache.row(7).size() == 8);
    CHECK(cache.rows_built() == 8);
    cache.value(3, 1);
    CHECK(cache.rows_built() == 8);  // smaller queries reuse existing rows
    CHECK(cache.row(9).size() == 10);
    CHECK(cache.value(9, 9) == 1);
}
