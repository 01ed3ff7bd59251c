#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "knotalg/knotalg.hpp"
#include "test_util.hpp"

using namespace knotalg;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }

std::vector<SeifertMatrix> bundled_table() {
    std::vector<SeifertMatrix> table;
    for (const KnotRecord& rec : parse_table(std::string(KNOTALG_DATA_DIR) + "/knots.csv"))
        table.push_back(rec.matrix());
    return table;
}

}  // namespace

TEST_CASE("validate_seifert") {
    CHECK_NOTHROW(validate_seifert(IntMatrix::parse("-1, 1; 0, -1")));
    CHECK_THROWS_AS(validate_seifert(IntMatrix::identity(2)), not_seifert);
    CHECK_NOTHROW(validate_seifert(IntMatrix()));
    CHECK_THROWS_AS(validate_seifert(IntMatrix::parse("0")), not_seifert);
    CHECK_THROWS_AS(validate_seifert(IntMatrix(2, 3)), not_seifert);
}

TEST_CASE("alexander_polynomial examples") {
    CHECK(alexander_polynomial(testutil::trefoil()) == P("t - 1 + t^-1"));
    CHECK(alexander_polynomial(testutil::figure_eight()) == P("-t + 3 - t^-1"));
    CHECK(alexander_polynomial(testutil::unknot()) == LaurentPoly(1));
}

TEST_CASE("alexander polynomial normalization holds on the bundled table") {
    for (const SeifertMatrix& v : bundled_table()) {
        // det(V - V^T) = 1 forces the raw determinant to evaluate to 1 at t=1
        const LaurentPoly raw = determinant(v.alexander_presentation());
        CHECK(abs(raw.evaluate(1)) == 1);
        const LaurentPoly delta = alexander_polynomial(v);
        CHECK(delta.evaluate(1) == 1);
        CHECK(delta.conjugate() == delta);
        CHECK(doteq(raw, delta));
        // order of the Alexander module equals the determinant
        CHECK(doteq(delta, order_of_presentation(Presentation{v.alexander_presentation()})));
        // multiplication by t-1 is invertible on the module
        CHECK(laurent_gcd(delta, P("t-1")) == LaurentPoly(1));
    }
}

TEST_CASE("signature_at_minus_one examples") {
    CHECK(signature_at_minus_one(testutil::trefoil()) == -2);
    CHECK(signature_at_minus_one(testutil::figure_eight()) == 0);
    CHECK(signature_at_minus_one(testutil::unknot()) == 0);
}

TEST_CASE("levine_tristram examples") {
    CHECK(levine_tristram_signature(testutil::trefoil(), mpq_class(1, 2)).value == -2);
    CHECK(levine_tristram_signature(testutil::trefoil(), mpq_class(1, 4)).value == -2);
    CHECK(levine_tristram_signature(testutil::trefoil(), mpq_class(1, 100)).value == 0);
    // theta = 1/6 hits the root of Delta on the unit circle
    CHECK_THROWS_AS(levine_tristram_signature(testutil::trefoil(), mpq_class(1, 6)),
                    omega_at_alexander_root);
    CHECK_THROWS_AS(levine_tristram_signature(testutil::trefoil(), mpq_class(3, 2)), error);
}

TEST_CASE("levine_tristram at 1/2 agrees with the exact signature on the table") {
    for (const SeifertMatrix& v : bundled_table())
        CHECK(levine_tristram_signature(v, mpq_class(1, 2)).value ==
              signature_at_minus_one(v));
}

TEST_CASE("connected_sum examples") {
    const SeifertMatrix granny = connected_sum(testutil::trefoil(), testutil::trefoil());
    const LaurentPoly delta3 = alexander_polynomial(testutil::trefoil());
    CHECK(alexander_polynomial(granny) == delta3 * delta3);
    const SeifertMatrix with_unknot = connected_sum(testutil::trefoil(), testutil::unknot());
    CHECK(alexander_polynomial(with_unknot) == delta3);
    CHECK(signature_at_minus_one(with_unknot) == -2);
    const SeifertMatrix mixed = connected_sum(testutil::trefoil(), testutil::figure_eight());
    CHECK(signature_at_minus_one(mixed) == -2);
}

TEST_CASE("connected sums over random table pairs") {
    const auto table = bundled_table();
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        const SeifertMatrix& a = table[pick(rng)];
        const SeifertMatrix& b = table[pick(rng)];
        const SeifertMatrix sum = connected_sum(a, b);
        CHECK(alexander_polynomial(sum) ==
              alexander_polynomial(a) * alexander_polynomial(b));
        CHECK(signature_at_minus_one(sum) ==
              signature_at_minus_one(a) + signature_at_minus_one(b));
    }
}
