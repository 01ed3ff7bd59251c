#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "knotalg/knotalg.hpp"
#include "test_util.hpp"

using namespace knotalg;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }
LaurentMatrix M(const std::string& s) { return LaurentMatrix::parse(s); }

std::vector<SeifertMatrix> bundled_table() {
    std::vector<SeifertMatrix> table;
    for (const KnotRecord& rec : parse_table(std::string(KNOTALG_DATA_DIR) + "/knots.csv"))
        table.push_back(rec.matrix());
    return table;
}

std::vector<LaurentPoly> basis_vector(std::size_t n, std::size_t i) {
    std::vector<LaurentPoly> e(n);
    e[i] = LaurentPoly(1);
    return e;
}

}  // namespace

TEST_CASE("residue_equal examples") {
    const LaurentPoly delta = P("t - 1 + t^-1");
    CHECK(residue_equal({P("t"), P("t^2 - t + 1")}, {LaurentPoly(1), delta}));
    CHECK(residue_equal({LaurentPoly(1), delta}, {LaurentPoly(1) + delta, delta}));
    CHECK_FALSE(residue_equal({LaurentPoly(1), delta}, {LaurentPoly(2), delta}));
    CHECK(ResidueClass{P("t^2 - 1"), P("t - 1")}.is_integral());
    CHECK_THROWS_AS(ResidueClass({LaurentPoly(1), LaurentPoly()}).is_integral(),
                    singular_matrix);
}

TEST_CASE("residue_equal is an equivalence compatible with the module structure") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const LaurentPoly den = testutil::random_poly(rng, 2, 3, false);
        const ResidueClass x{testutil::random_poly(rng, 2, 3), den};
        const ResidueClass y{testutil::random_poly(rng, 2, 3), den};
        const LaurentPoly shift = testutil::random_poly(rng, 2, 3);
        const ResidueClass x_shifted{x.numerator + shift * den, den};
        CHECK(residue_equal(x, x));
        CHECK(residue_equal(x, x_shifted));
        CHECK(residue_equal(x_shifted, x));
        // compatibility with addition and polynomial multiplication
        CHECK(residue_equal(x + y, x_shifted + y));
        const LaurentPoly p = testutil::random_poly(rng, 2, 3);
        CHECK(residue_equal(p * x, p * x_shifted));
    }
}

TEST_CASE("blanchfield_table examples") {
    const BlanchfieldPresentation trefoil = blanchfield_table(testutil::trefoil());
    CHECK(trefoil.delta == P("t - 1 + t^-1"));
    CHECK(residue_equal(trefoil.table[0][0], {LaurentPoly(1), P("t - 1 + t^-1")}));

    const BlanchfieldPresentation fig8 = blanchfield_table(testutil::figure_eight());
    CHECK(residue_equal(fig8.table[0][0], {LaurentPoly(1), P("t - 3 + t^-1")}));

    const BlanchfieldPresentation empty = blanchfield_table(testutil::unknot());
    CHECK(empty.size() == 0);
}

TEST_CASE("blanchfield table is hermitian and Delta-annihilated on the bundled table") {
    for (const SeifertMatrix& v : bundled_table()) {
        const BlanchfieldPresentation b = blanchfield_table(v);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                CHECK(residue_equal(b.table[j][i], b.table[i][j].conjugate()));
                CHECK((b.delta * b.table[i][j]).is_integral());
            }
    }
}

TEST_CASE("lambda_pairing examples") {
    const LaurentPoly delta = P("t - 1 + t^-1");
    const LaurentMatrix a = M("t - 1 + t^-1");
    CHECK(residue_equal(lambda_pairing(a, {LaurentPoly(1)}, {LaurentPoly(1)}),
                        {LaurentPoly(1), delta}));
    const LaurentMatrix diag = M("t - 1 + t^-1, 0; 0, t - 1 + t^-1");
    CHECK(residue_equal(lambda_pairing(diag, basis_vector(2, 0), basis_vector(2, 1)),
                        {LaurentPoly(), LaurentPoly(1)}));
    // Delta * e pairs integrally with everything: annihilation
    CHECK(lambda_pairing(a, {delta}, {LaurentPoly(1)}).is_integral());
    CHECK_THROWS_AS(lambda_pairing(M("t"), {LaurentPoly(1)}, {LaurentPoly(1)}),
                    not_hermitian);
    CHECK_THROWS_AS(lambda_pairing(M("0"), {LaurentPoly(1)}, {LaurentPoly(1)}),
                    singular_matrix);
    CHECK_THROWS_AS(lambda_pairing(a, basis_vector(2, 0), basis_vector(2, 0)),
                    dimension_mismatch);
}

TEST_CASE("lambda_pairing is hermitian in its arguments") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 2;
        const LaurentMatrix a = testutil::random_hermitian(rng, n);
        std::vector<LaurentPoly> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = testutil::random_poly(rng, 2, 2);
            y[i] = testutil::random_poly(rng, 2, 2);
        }
        CHECK(residue_equal(lambda_pairing(a, x, y),
                            lambda_pairing(a, y, x).conjugate()));
    }
}

TEST_CASE("lambda_pairing transforms correctly under congruence") {
    // congruence(A, U) carries lambda(A) to lambda(U* A U) along the
    // isometry x -> conj-transpose(U) x
    std::mt19937 rng(303);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 2;
        const LaurentMatrix a = testutil::random_hermitian(rng, n);
        const LaurentMatrix u = testutil::random_unit_transform(rng, n);
        const LaurentMatrix b = congruence(a, u);
        const LaurentMatrix h = hermitian_conjugate(u);
        for (int rep = 0; rep < 2; ++rep) {
            std::vector<LaurentPoly> x(n), y(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = testutil::random_poly(rng, 1, 2);
                y[i] = testutil::random_poly(rng, 1, 2);
            }
            std::vector<LaurentPoly> hx(n), hy(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    hx[i] += h.at(i, j) * x[j];
                    hy[i] += h.at(i, j) * y[j];
                }
            CHECK(residue_equal(lambda_pairing(b, hx, hy), lambda_pairing(a, x, y)));
        }
    }
}

TEST_CASE("pairing_audit") {
    const PairingAuditReport good = pairing_audit(blanchfield_table(testutil::trefoil()));
    CHECK(good.all_ok());

    // corrupting one off-diagonal entry breaks hermitian symmetry
    BlanchfieldPresentation bad = blanchfield_table(testutil::trefoil());
    bad.table[0][1].numerator = -bad.table[0][1].numerator;
    const PairingAuditReport report = pairing_audit(bad);
    CHECK_FALSE(report.hermitian_ok);

    CHECK(pairing_audit(blanchfield_table(testutil::unknot())).all_ok());
}
