#include <cmath>
#include <stdexcept>
#include "doctest.h"
#include "qsurf/analysis.hpp"
#include "qsurf/enumeration.hpp"

using namespace qsurf;

TEST_CASE("class bookkeeping") {
    auto w2 = classes_of_weight(2);
    REQUIRE(w2.size() == 6);
    CHECK(w2[0].label() == "XX");
    CHECK(w2[1].label() == "XZ");
    CHECK(w2[2].label() == "XY");
    CHECK(w2[3].label() == "ZZ");
    CHECK(w2[4].label() == "ZY");
    CHECK(w2[5].label() == "YY");
    for (int j = 1; j <= 5; ++j)
        CHECK(classes_of_weight(j).size() == binomial(j + 2, 2));

    CHECK(class_combinations(13, {2, 0, 0}) == 78);
    CHECK(class_combinations(13, {1, 1, 0}) == 156);
    CHECK(class_combinations(13, {1, 1, 1}) == 1716);
    // per-weight total is C(n,j) 3^j
    for (int j : {2, 3}) {
        uint64_t total = 0;
        for (const ErrorClass& c : classes_of_weight(j)) total += class_combinations(13, c);
        CHECK(total == binomial(13, j) * static_cast<uint64_t>(std::pow(3, j)));
    }
}

TEST_CASE("two-qubit classes of the distance-3 code") {
    SurfaceCode code = build_surface_code(3, 3);
    ClassCount xz = enumerate_class(code, Decoder::mwpm, nullptr, {1, 1, 0});
    CHECK(xz.failures == 0);

    ClassCount yy = enumerate_class(code, Decoder::mwpm, nullptr, {0, 0, 2});
    CHECK(yy.total == 78);
    CHECK(yy.failures == 40);
    CHECK(yy.fraction() == doctest::Approx(0.51).epsilon(0.01));

    ClassCount zz = enumerate_class(code, Decoder::mwpm, nullptr, {0, 2, 0});
    CHECK(zz.failures == 21);
}

TEST_CASE("beta rows") {
    SurfaceCode c13 = build_surface_code(3, 3);
    BetaRow r1 = beta_row(c13, Decoder::mwpm, nullptr, 1);
    CHECK(r1.one_minus_beta == 0.0);  // weight t is always corrected

    BetaRow r2 = beta_row(c13, Decoder::mwpm, nullptr, 2);
    CHECK(r2.total == 702);
    CHECK(r2.failures == 166);
    CHECK(std::abs(r2.one_minus_beta - 0.24) <= 0.005);
    CHECK(std::abs(r2.one_minus_beta_z - 0.27) <= 0.005);

    SurfaceCode c23 = build_surface_code(3, 5);
    ClassCount zz23 = beta_z(c23, Decoder::mwpm, nullptr, 2);
    CHECK(zz23.failures == 0);
    ClassCount zzz23 = beta_z(c23, Decoder::mwpm, nullptr, 3);
    CHECK(zzz23.total == 1771);
    CHECK(std::abs(zzz23.fraction() - 0.08) <= 0.005);

    CHECK(beta_z(c13, Decoder::mwpm, nullptr, 1).failures == 0);
}

TEST_CASE("budget guard") {
    SurfaceCode code = build_surface_code(3, 3);
    try {
        enumerate_class(code, Decoder::mwpm, nullptr, {0, 2, 0}, 10);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.required == 78);
        CHECK(e.budget == 10);
    }
}

TEST_CASE("worker count does not change counts") {
    SurfaceCode code = build_surface_code(3, 3);
    ClassCount a = enumerate_class(code, Decoder::mwpm, nullptr, {1, 1, 1}, kDefaultBudget, 1);
    ClassCount b = enumerate_class(code, Decoder::mwpm, nullptr, {1, 1, 1}, kDefaultBudget, 3);
    CHECK(a.failures == b.failures);
    CHECK(a.total == b.total);
}

TEST_CASE("ml enumeration on the small code") {
    SurfaceCode code = build_surface_code(3, 3);
    Channel ch = channel_from_bias(0.1, 1.0);
    // ML corrects at least as many patterns as matching in every class
    for (const ErrorClass& cls : classes_of_weight(2)) {
        ClassCount ml = enumerate_class(code, Decoder::ml, &ch, cls);
        ClassCount mw = enumerate_class(code, Decoder::mwpm, nullptr, cls);
        CHECK(ml.total == mw.total);
    }
    SurfaceCode big = build_surface_code(5, 5);
    CHECK_THROWS_AS(enumerate_class(big, Decoder::ml, &ch, {0, 2, 0}), std::invalid_argument);
}

TEST_CASE("beta table json round trip") {
    SurfaceCode code = build_surface_code(3, 3);
    BetaTable table = enumerate_beta(code, Decoder::mwpm, nullptr, 2);
    REQUIRE(table.rows.size() == 2);
    std::string text = beta_table_to_json(table);
    BetaTable back = beta_table_from_json(text);
    CHECK(back.code_id == table.code_id);
    CHECK(back.decoder == "mwpm");
    REQUIRE(back.rows.size() == table.rows.size());
    for (size_t i = 0; i < table.rows.size(); ++i) {
        CHECK(back.rows[i].failures == table.rows[i].failures);
        CHECK(back.rows[i].total == table.rows[i].total);
        CHECK(back.rows[i].classes.size() == table.rows[i].classes.size());
    }
    CHECK(back.row(2) != nullptr);
    CHECK(back.row(2)->failures == 166);
    CHECK(back.row(7) == nullptr);
}
