#include "clonelab/json_io.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

using namespace clonelab;

TEST_CASE("finite rigs round-trip through JSON") {
    const RigHandle ut = testing::upper_triangular_z2();
    const Json j = finite_rig_to_json(ut->tables());
    CHECK(finite_rig_from_json(j) == ut->tables());

    const Json bool2 = parse_json(R"({"size":2,"add":[[0,1],[1,1]],"mul":[[0,0],[0,1]],)"
                                  R"("zero":0,"one":1})");
    CHECK(make_finite_rig(finite_rig_from_json(bool2))->equals(*rig_bool2()));
}

TEST_CASE("malformed rig documents are structural errors") {
    CHECK_THROWS_AS(finite_rig_from_json(parse_json(R"({"size":2})")), StructuralError);
    CHECK_THROWS_AS(
        finite_rig_from_json(parse_json(
            R"({"size":2,"add":[[0,1]],"mul":[[0,0],[0,1]],"zero":0,"one":1})")),
        StructuralError);
    CHECK_THROWS_AS(
        finite_rig_from_json(parse_json(
            R"({"size":2,"add":[[0,9],[1,1]],"mul":[[0,0],[0,1]],"zero":0,"one":1})")),
        StructuralError);
    CHECK_THROWS_AS(parse_json("{not json"), StructuralError);
}

TEST_CASE("rig references resolve names and inline tables") {
    CHECK(rig_from_json(Json("zmod(5)"))->equals(*rig_zmod(5)));
    CHECK(rig_to_json(rig_zmod(5)) == Json("zmod(5)"));
    CHECK(rig_to_json(rig_integers()) == Json("int"));

    const RigHandle ut = testing::upper_triangular_z2();
    const Json inline_tables = rig_to_json(ut);
    CHECK(inline_tables.is_object());
    CHECK(rig_from_json(inline_tables)->equals(*ut));
}

TEST_CASE("operation tables round-trip and validate") {
    const OpTable join{2, 2, {0, 1, 1, 1}};
    CHECK(optable_from_json(optable_to_json(join)) == join);
    CHECK_THROWS_AS(optable_from_json(parse_json(R"({"k":2,"arity":2,"outputs":[0,1]})")),
                    StructuralError);
    CHECK_THROWS_AS(optable_from_json(parse_json(R"({"k":2,"arity":1,"outputs":[0,7]})")),
                    StructuralError);
}

TEST_CASE("matrices round-trip over every backend") {
    std::mt19937 rng(20250820);
    for (const RigHandle& rig : {rig_zmod(5), testing::upper_triangular_z2()}) {
        const RigMatrix m = testing::random_matrix(rig, 2, 3, rng);
        CHECK(matrices_equal(matrix_from_json(matrix_to_json(m)), m));
    }

    const RigHandle zhalf = rig_dadic(2);
    const RigMatrix dy(zhalf, 1, 2,
                       {RigValue(Dadic(2, 7, 2)), RigValue(Dadic(2, -3, 0))});
    const Json j = matrix_to_json(dy);
    CHECK(j["entries"][0][0] == Json("7/2^2"));
    CHECK(j["entries"][0][1] == Json(-3));
    CHECK(matrices_equal(matrix_from_json(j), dy));

    const RigMatrix big(rig_integers(), 1, 1, {RigValue(BigInt("123456789012345678901234567890"))});
    CHECK(matrices_equal(matrix_from_json(matrix_to_json(big)), big));
}

TEST_CASE("entry shapes and ranges are validated") {
    const RigHandle z3 = rig_zmod(3);
    CHECK_THROWS_AS(matrix_from_entries(parse_json("[[0,1],[2]]"), z3), StructuralError);
    CHECK_THROWS_AS(matrix_from_entries(parse_json("[[0,5]]"), z3), StructuralError);
    CHECK_THROWS_AS(matrix_from_entries(parse_json("[[0,\"junk\"]]"), z3), StructuralError);
    CHECK_THROWS_AS(
        matrix_from_entries(parse_json("[[\"1/3^1\"]]"), rig_dadic(2)), StructuralError);

    const RigMatrix zero_by_two = matrix_from_entries(parse_json("[]"), z3);
    CHECK(zero_by_two.rows() == 0);
}

TEST_CASE("commutant reports carry canonical fields") {
    const auto gens = GeneratorSet::of(2, {OpTable{2, 2, {0, 1, 1, 1}}});
    const auto result = commutant(gens, 1);
    const Json report = commutant_report(gens, 1, result);
    CHECK(report["schema"] == 1);
    CHECK(report["carrier"] == 2);
    CHECK(report["arity"] == 1);
    CHECK(report["count"] == 3);
    CHECK(report["ops"].size() == 3);
    CHECK(report["generators"].size() == 1);
    CHECK(report["visited"].get<std::uint64_t>() > 0);
}
