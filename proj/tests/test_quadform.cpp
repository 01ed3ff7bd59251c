#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "knotalg/knotalg.hpp"
#include "test_util.hpp"

using namespace knotalg;

namespace {

bool is_diag_pm1(const IntMatrix& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (i == j && d.at(i, i) != 1 && d.at(i, i) != -1) return false;
            if (i != j && d.at(i, j) != 0) return false;
        }
    return true;
}

void check_yes_witness(const IntMatrix& q, const DiagVerdict& v) {
    REQUIRE(v.decision == DiagVerdict::Decision::yes);
    const mpz_class dp = int_determinant(v.witness_P);
    CHECK((dp == 1 || dp == -1));
    CHECK(is_diag_pm1(v.witness_P * q * v.witness_P.transpose()));
}

}  // namespace

TEST_CASE("diagonalizable_over_Z decision examples") {
    const IntMatrix odd_hyperbolic = IntMatrix::parse("0, 1; 1, 1");
    check_yes_witness(odd_hyperbolic, diagonalizable_over_Z(odd_hyperbolic));

    const DiagVerdict even_h = diagonalizable_over_Z(IntMatrix::parse("0, 1; 1, 0"));
    CHECK(even_h.decision == DiagVerdict::Decision::no);
    CHECK(even_h.obstruction == DiagVerdict::Obstruction::even_form);

    const DiagVerdict e8 = diagonalizable_over_Z(testutil::e8_gram());
    CHECK(e8.decision == DiagVerdict::Decision::no);
    CHECK(e8.obstruction == DiagVerdict::Obstruction::even_form);

    // E8 + [1]: odd and positive definite, but no vector of norm 1 splits
    const IntMatrix e8_plus_one =
        IntMatrix::block_diag(testutil::e8_gram(), IntMatrix::identity(1));
    const DiagVerdict stuck = diagonalizable_over_Z(e8_plus_one);
    CHECK(stuck.decision == DiagVerdict::Decision::no);
    CHECK(stuck.obstruction == DiagVerdict::Obstruction::definite_no_unit_splitting);

    const DiagVerdict empty = diagonalizable_over_Z(IntMatrix());
    CHECK(empty.decision == DiagVerdict::Decision::yes);

    CHECK_THROWS_AS(diagonalizable_over_Z(IntMatrix::parse("2")), not_unimodular);
    CHECK_THROWS_AS(diagonalizable_over_Z(IntMatrix::parse("0, 1; -1, 0")), not_symmetric);
}

TEST_CASE("already-diagonal forms come back yes") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 5;
        IntMatrix q(n, n);
        for (std::size_t i = 0; i < n; ++i) q.at(i, i) = sgn(rng) ? 1 : -1;
        const DiagVerdict v = diagonalizable_over_Z(q);
        check_yes_witness(q, v);
        const auto [plus, minus] = signed_counts(v, q);
        CHECK(plus + minus == static_cast<long>(n));
        CHECK(plus - minus == int_signature(q));
    }
}

TEST_CASE("diagonalizability is a congruence invariant") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::uniform_int_distribution<long> small(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 3;
        IntMatrix q(n, n);
        for (std::size_t i = 0; i < n; ++i) q.at(i, i) = sgn(rng) ? 1 : -1;
        // scramble with a random unimodular integer matrix built from
        // elementary row additions
        IntMatrix u = IntMatrix::identity(n);
        for (int k = 0; k < 4; ++k) {
            const std::size_t i = k % n, j = (k + 1 + trial) % n;
            if (i == j) continue;
            const long f = small(rng);
            for (std::size_t c = 0; c < n; ++c) u.at(i, c) += f * u.at(j, c);
        }
        const IntMatrix scrambled = u * q * u.transpose();
        const DiagVerdict v = diagonalizable_over_Z(scrambled);
        check_yes_witness(scrambled, v);
        const auto [plus, minus] = signed_counts(v, scrambled);
        CHECK(plus - minus == int_signature(q));
    }
}

TEST_CASE("signed_counts examples and errors") {
    const IntMatrix one = IntMatrix::parse("1");
    const DiagVerdict v1 = diagonalizable_over_Z(one);
    CHECK(signed_counts(v1, one) == std::make_pair(1L, 0L));

    const IntMatrix minus_one = IntMatrix::parse("-1");
    CHECK(signed_counts(diagonalizable_over_Z(minus_one), minus_one) ==
          std::make_pair(0L, 1L));

    const IntMatrix two = IntMatrix::identity(2);
    CHECK(signed_counts(diagonalizable_over_Z(two), two) == std::make_pair(2L, 0L));

    DiagVerdict undecided;
    CHECK_THROWS_AS(signed_counts(undecided, one), not_diagonalized);
}
