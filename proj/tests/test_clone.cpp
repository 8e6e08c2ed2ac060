#include "clonelab/clone.hpp"

#include "clonelab/theories.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace clonelab;

namespace {

const OpTable join2{2, 2, {0, 1, 1, 1}};
const OpTable meet2{2, 2, {0, 0, 0, 1}};

std::vector<OpTable> all_ops(std::uint32_t k, std::uint32_t arity) {
    std::vector<OpTable> ops;
    OpTable f{k, arity, std::vector<std::uint32_t>(power_checked(k, arity), 0)};
    while (true) {
        ops.push_back(f);
        std::size_t pos = f.outputs.size();
        while (pos > 0) {
            if (++f.outputs[pos - 1] < k)
                break;
            f.outputs[pos - 1] = 0;
            --pos;
        }
        if (pos == 0)
            break;
    }
    return ops;
}

/// Independent closure oracle: tables realizable by terms of depth <= d,
/// grown one depth level at a time until stable.
CloneSlice clone_slice_by_term_depth(const GeneratorSet& gens, std::uint32_t arity) {
    std::set<std::vector<std::uint32_t>> tables;
    std::vector<OpTable> frontier;
    for (std::uint32_t i = 0; i < arity; ++i) {
        const OpTable p = projection(arity, i, gens.carrier);
        if (tables.insert(p.outputs).second)
            frontier.push_back(p);
    }
    bool grew = true;
    std::vector<OpTable> everything = frontier;
    while (grew) {
        grew = false;
        std::vector<OpTable> next;
        for (const OpTable& g : gens.generators) {
            if (g.arity == 0) {
                OpTable c = constant_op(gens.carrier, g.outputs[0], arity);
                if (tables.insert(c.outputs).second) {
                    next.push_back(c);
                    grew = true;
                }
                continue;
            }
            if (everything.empty())
                continue;
            std::vector<std::size_t> pick(g.arity, 0);
            while (true) {
                std::vector<OpTable> inners;
                for (std::size_t t = 0; t < pick.size(); ++t)
                    inners.push_back(everything[pick[t]]);
                OpTable h = compose(g, inners, arity);
                if (tables.insert(h.outputs).second) {
                    next.push_back(h);
                    grew = true;
                }
                std::size_t t = 0;
                for (; t < pick.size(); ++t) {
                    if (++pick[t] < everything.size())
                        break;
                    pick[t] = 0;
                }
                if (t == pick.size())
                    break;
            }
        }
        everything.insert(everything.end(), next.begin(), next.end());
    }
    return CloneSlice::of(gens.carrier, arity, std::move(everything));
}

} // namespace

TEST_CASE("projections commute with every operation") {
    for (const OpTable& nu : all_ops(2, 2)) {
        CHECK(op_commutes(projection(2, 0, 2), nu));
        CHECK(op_commutes(projection(2, 1, 2), nu));
    }
    for (const OpTable& nu : all_ops(2, 1))
        CHECK(op_commutes(projection(3, 1, 2), nu));
}

TEST_CASE("join and meet do not commute, and the classic grid witnesses it") {
    CHECK_FALSE(op_commutes(join2, meet2));
    CHECK(op_commutes(join2, join2));

    // the 2x2 grid [[1,0],[0,1]]: meets of column-joins give 1, join of
    // row-meets gives 0
    const std::vector<std::uint32_t> grid{1, 0, 0, 1};
    const std::uint32_t lhs = meet2.eval(std::array<std::uint32_t, 2>{
        join2.eval(std::array<std::uint32_t, 2>{grid[0], grid[2]}),
        join2.eval(std::array<std::uint32_t, 2>{grid[1], grid[3]})});
    const std::uint32_t rhs = join2.eval(std::array<std::uint32_t, 2>{
        meet2.eval(std::array<std::uint32_t, 2>{grid[0], grid[1]}),
        meet2.eval(std::array<std::uint32_t, 2>{grid[2], grid[3]})});
    CHECK(lhs == 1);
    CHECK(rhs == 0);

    const auto witness = op_commutes_witness(join2, meet2);
    REQUIRE(witness.has_value());
    CHECK(witness->size() == 4);
    CHECK_FALSE(op_commutes_witness(join2, join2).has_value());
}

TEST_CASE("nullary commutation degenerates to equality and fixed points") {
    const OpTable c0 = constant_op(2, 0);
    const OpTable c1 = constant_op(2, 1);
    CHECK(op_commutes(c0, c0));
    CHECK(op_commutes(c1, c1));
    CHECK_FALSE(op_commutes(c0, c1));

    for (const OpTable& mu : all_ops(2, 2)) {
        const std::array<std::uint32_t, 2> zeros{0, 0}, ones{1, 1};
        CHECK(op_commutes(c0, mu) == (mu.eval(zeros) == 0));
        CHECK(op_commutes(c1, mu) == (mu.eval(ones) == 1));
        CHECK(op_commutes(c0, mu) == op_commutes(mu, c0));
    }
}

TEST_CASE("commutation is symmetric at small arities") {
    std::vector<OpTable> ops;
    for (std::uint32_t arity = 0; arity <= 2; ++arity)
        for (const OpTable& op : all_ops(2, arity))
            ops.push_back(op);
    for (const OpTable& mu : ops)
        for (const OpTable& nu : ops)
            CHECK(op_commutes(mu, nu) == op_commutes(nu, mu));
}

TEST_CASE("componentwise reduction matches the direct grid maps") {
    std::mt19937 rng(20250812);
    std::uniform_int_distribution<std::uint32_t> pick_arity(0, 2);
    std::uniform_int_distribution<std::uint32_t> pick_count(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t n = pick_arity(rng), m = pick_count(rng);
        const std::uint32_t np = pick_arity(rng), mp = pick_count(rng);
        std::vector<OpTable> mu_parts, nu_parts;
        for (std::uint32_t i = 0; i < m; ++i)
            mu_parts.push_back(testing::random_optable(2, n, rng));
        for (std::uint32_t i = 0; i < mp; ++i)
            nu_parts.push_back(testing::random_optable(2, np, rng));
        const MultiOp mu = MultiOp::of(2, n, std::move(mu_parts));
        const MultiOp nu = MultiOp::of(2, np, std::move(nu_parts));
        CHECK(multiop_commutes(mu, nu) == testing::multiop_commutes_direct(mu, nu));
    }
}

TEST_CASE("empty multi-operations commute with everything") {
    const MultiOp empty = MultiOp::of(2, 1, {});
    const MultiOp pair = MultiOp::of(2, 2, {projection(2, 0, 2), projection(2, 1, 2)});
    CHECK(multiop_commutes(empty, pair));
    CHECK(multiop_commutes(pair, MultiOp::of(2, 2, {join2})));
}

TEST_CASE("commutant of join alone is the three monotone unary maps") {
    const auto result = commutant(GeneratorSet::of(2, {join2}), 1);
    const std::vector<OpTable> expected{
        OpTable{2, 1, {0, 0}}, OpTable{2, 1, {0, 1}}, OpTable{2, 1, {1, 1}}};
    CHECK(result.slice.ops == expected);
    CHECK(result.visited > 0);
}

TEST_CASE("commutant of the module generators at arity two is the row family") {
    const auto result = commutant(GeneratorSet::of(2, {join2, constant_op(2, 0)}), 2);
    std::vector<OpTable> expected;
    for (std::uint32_t w0 = 0; w0 < 2; ++w0)
        for (std::uint32_t w1 = 0; w1 < 2; ++w1)
            expected.push_back(op_from_row(
                RigMatrix::row(rig_bool2(), {RigValue(w0), RigValue(w1)}), Side::left));
    CHECK(clones_equal_at_arity(result.slice, CloneSlice::of(2, 2, std::move(expected))));
    CHECK(result.slice.ops.size() == 4);
}

TEST_CASE("the empty generator set constrains nothing") {
    const auto result = commutant(GeneratorSet::of(2, {}), 1);
    CHECK(result.slice.ops.size() == 4);
}

TEST_CASE("backtracking commutant agrees with plain enumeration") {
    const std::vector<GeneratorSet> generator_sets{
        GeneratorSet::of(2, {}),
        GeneratorSet::of(2, {join2}),
        GeneratorSet::of(2, {join2, constant_op(2, 0)}),
        GeneratorSet::of(2, {join2, constant_op(2, 0), constant_op(2, 1)}),
    };
    for (const auto& gens : generator_sets)
        for (std::uint32_t n = 0; n <= 3; ++n)
            CHECK(clones_equal_at_arity(commutant(gens, n).slice,
                                        commutant_by_enumeration(gens, n)));

    const RigHandle z3 = rig_zmod(3);
    const std::vector<GeneratorSet> ternary_sets{
        GeneratorSet::of(3, {malcev_op(z3)}),
        theory_generators(TheoryName::of(TheoryTag::mat_left, z3)),
    };
    for (const auto& gens : ternary_sets)
        for (std::uint32_t n = 0; n <= 2; ++n)
            CHECK(clones_equal_at_arity(commutant(gens, n).slice,
                                        commutant_by_enumeration(gens, n)));
}

TEST_CASE("backtracking matches enumeration on random generator sets") {
    std::mt19937 rng(20250830);
    std::uniform_int_distribution<std::uint32_t> pick_arity(0, 2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<OpTable> gens;
        const int count = 1 + trial % 2;
        for (int i = 0; i < count; ++i)
            gens.push_back(testing::random_optable(2, pick_arity(rng), rng));
        const GeneratorSet set = GeneratorSet::of(2, std::move(gens));
        for (std::uint32_t n = 0; n <= 3; ++n)
            CHECK(clones_equal_at_arity(commutant(set, n).slice,
                                        commutant_by_enumeration(set, n)));
    }
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<OpTable> gens{testing::random_optable(3, pick_arity(rng), rng),
                                  testing::random_optable(3, pick_arity(rng), rng)};
        const GeneratorSet set = GeneratorSet::of(3, std::move(gens));
        for (std::uint32_t n = 0; n <= 2; ++n)
            CHECK(clones_equal_at_arity(commutant(set, n).slice,
                                        commutant_by_enumeration(set, n)));
    }
}

TEST_CASE("clone generation matches the term-depth oracle on random generators") {
    std::mt19937 rng(20250831);
    std::uniform_int_distribution<std::uint32_t> pick_arity(1, 2);
    for (int trial = 0; trial < 12; ++trial) {
        const GeneratorSet set =
            GeneratorSet::of(2, {testing::random_optable(2, pick_arity(rng), rng)});
        for (std::uint32_t n = 0; n <= 2; ++n)
            CHECK(clones_equal_at_arity(generate_clone(set, n),
                                        clone_slice_by_term_depth(set, n)));
    }
    for (int trial = 0; trial < 6; ++trial) {
        const GeneratorSet set =
            GeneratorSet::of(3, {testing::random_optable(3, 1, rng)});
        for (std::uint32_t n = 0; n <= 2; ++n)
            CHECK(clones_equal_at_arity(generate_clone(set, n),
                                        clone_slice_by_term_depth(set, n)));
    }
}

TEST_CASE("exhausting the node budget is a loud resource error") {
    // budget smaller than the output array: rejected before searching
    CHECK_THROWS_AS(commutant(GeneratorSet::of(2, {join2}), 2, SearchLimits{.node_budget = 3}),
                    ResourceError);

    // budget that admits the array but not the search: aborts mid-flight
    try {
        commutant(GeneratorSet::of(2, {join2}), 2, SearchLimits{.node_budget = 5});
        FAIL("expected a ResourceError");
    } catch (const ResourceError& e) {
        CHECK(e.visited() > 5);
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("commutant slices always contain the projections") {
    std::mt19937 rng(20250813);
    for (int trial = 0; trial < 10; ++trial) {
        const GeneratorSet gens =
            GeneratorSet::of(2, {testing::random_optable(2, 2, rng)});
        const CloneSlice slice = commutant(gens, 2).slice;
        CHECK(slice.contains(projection(2, 0, 2)));
        CHECK(slice.contains(projection(2, 1, 2)));
    }
}

TEST_CASE("commutant slices are closed under superposition") {
    const CloneSlice unary = commutant(GeneratorSet::of(2, {join2}), 1).slice;
    for (const OpTable& f : unary.ops)
        for (const OpTable& g : unary.ops)
            CHECK(unary.contains(compose(f, std::vector<OpTable>{g})));
}

TEST_CASE("generate_clone reproduces the nonzero-row slice of join") {
    const CloneSlice slice = generate_clone(GeneratorSet::of(2, {join2}), 2);
    const std::vector<OpTable> expected{
        OpTable{2, 2, {0, 0, 1, 1}}, OpTable{2, 2, {0, 1, 0, 1}}, OpTable{2, 2, {0, 1, 1, 1}}};
    CHECK(slice.ops == expected);
}

TEST_CASE("the affine Mal'cev term generates only the identity at arity one") {
    const CloneSlice slice = generate_clone(GeneratorSet::of(3, {malcev_op(rig_zmod(3))}), 1);
    REQUIRE(slice.ops.size() == 1);
    CHECK(slice.ops[0] == projection(1, 0, 3));
}

TEST_CASE("generate_clone of nothing is the projection-only slice") {
    const CloneSlice slice = generate_clone(GeneratorSet::of(3, {}), 2);
    CHECK(slice.ops.size() == 2);
    CHECK(slice.contains(projection(2, 0, 3)));
    CHECK(slice.contains(projection(2, 1, 3)));
}

TEST_CASE("generate_clone agrees with the term-depth oracle") {
    const RigHandle z3 = rig_zmod(3);
    const std::vector<GeneratorSet> generator_sets{
        GeneratorSet::of(2, {join2}),
        GeneratorSet::of(2, {join2, constant_op(2, 1)}),
        GeneratorSet::of(2, {OpTable{2, 1, {1, 0}}}), // negation
        GeneratorSet::of(3, {malcev_op(z3)}),
    };
    for (const auto& gens : generator_sets)
        for (std::uint32_t n = 0; n <= 2; ++n)
            CHECK(clones_equal_at_arity(generate_clone(gens, n),
                                        clone_slice_by_term_depth(gens, n)));
}

TEST_CASE("clones_equal_at_arity compares canonical listings") {
    const auto with_tops = GeneratorSet::of(2, {join2, constant_op(2, 0), constant_op(2, 1)});
    CHECK(clones_equal_at_arity(commutant(with_tops, 2).slice,
                                generate_clone(GeneratorSet::of(2, {join2}), 2)));
    CHECK_FALSE(clones_equal_at_arity(commutant(GeneratorSet::of(2, {join2}), 1).slice,
                                      generate_clone(GeneratorSet::of(2, {join2}), 1)));
    const CloneSlice slice = generate_clone(GeneratorSet::of(2, {join2}), 1);
    CHECK(clones_equal_at_arity(slice, slice));
    CHECK_THROWS_AS(
        clones_equal_at_arity(CloneSlice::of(2, 1, {}), CloneSlice::of(2, 2, {})),
        StructuralError);
}

TEST_CASE("the commutant is antitone and inflationary as a Galois connection") {
    const GeneratorSet small = GeneratorSet::of(2, {join2});
    const GeneratorSet large = GeneratorSet::of(2, {join2, constant_op(2, 0)});
    for (std::uint32_t n = 0; n <= 2; ++n) {
        const CloneSlice of_large = commutant(large, n).slice;
        const CloneSlice of_small = commutant(small, n).slice;
        for (const OpTable& op : of_large.ops)
            CHECK(of_small.contains(op));
    }

    // every generator lies in the double commutant
    std::vector<OpTable> collected;
    for (std::uint32_t a = 0; a <= 2; ++a) {
        const CloneSlice slice = commutant(small, a).slice;
        collected.insert(collected.end(), slice.ops.begin(), slice.ops.end());
    }
    const CloneSlice twice = commutant(GeneratorSet::of(2, std::move(collected)), 2).slice;
    CHECK(twice.contains(join2));
}

TEST_CASE("commutant of generators equals commutant of the generated slices") {
    const GeneratorSet join_only = GeneratorSet::of(2, {join2});
    std::vector<OpTable> generated;
    for (std::uint32_t a = 0; a <= 2; ++a) {
        const CloneSlice slice = generate_clone(join_only, a);
        generated.insert(generated.end(), slice.ops.begin(), slice.ops.end());
    }
    const GeneratorSet as_generators = GeneratorSet::of(2, std::move(generated));
    for (std::uint32_t n = 0; n <= 2; ++n)
        CHECK(clones_equal_at_arity(commutant(join_only, n).slice,
                                    commutant(as_generators, n).slice));
}

TEST_CASE("double commutant of join reproduces its clone") {
    const GeneratorSet join_only = GeneratorSet::of(2, {join2});
    std::vector<OpTable> collected;
    for (std::uint32_t a = 0; a <= 2; ++a) {
        const CloneSlice slice = commutant(join_only, a).slice;
        collected.insert(collected.end(), slice.ops.begin(), slice.ops.end());
    }
    const GeneratorSet double_gens = GeneratorSet::of(2, std::move(collected));
    for (std::uint32_t n = 0; n <= 2; ++n)
        CHECK(clones_equal_at_arity(commutant(double_gens, n).slice,
                                    generate_clone(join_only, n)));
}

TEST_CASE("left and right modules are mutual commutants over a noncommutative rig") {
    const RigHandle ut = testing::upper_triangular_z2();
    const auto left_gens = theory_generators(TheoryName::of(TheoryTag::mat_left, ut));
    const auto right_gens = theory_generators(TheoryName::of(TheoryTag::mat_right, ut));
    for (std::uint32_t n = 0; n <= 2; ++n) {
        const CommutantResult of_left = commutant(left_gens, n);
        const CommutantResult of_right = commutant(right_gens, n);
        CHECK(clones_equal_at_arity(of_left.slice,
                                    theory_slice(TheoryName::of(TheoryTag::mat_right, ut), n)));
        CHECK(clones_equal_at_arity(of_right.slice,
                                    theory_slice(TheoryName::of(TheoryTag::mat_left, ut), n)));
        CHECK(of_left.slice.ops.size() == power_checked(8, n));
    }
}

TEST_CASE("matrix commutation matches the induced row operations") {
    // exhaustive over all matrix pairs with dimensions <= 2 for the small
    // carriers; strided through the triangular rig where exhaustion is
    // out of reach
    for (const RigHandle& rig :
         {rig_bool2(), rig_zmod(3), testing::upper_triangular_z2()}) {
        const std::uint32_t k = rig->size();
        const std::size_t max_dim = 2;
        for (std::size_t m = 1; m <= max_dim; ++m)
            for (std::size_t n = 1; n <= max_dim; ++n)
                for (std::size_t mp = 1; mp <= max_dim; ++mp)
                    for (std::size_t np = 1; np <= max_dim; ++np) {
                        const std::uint64_t total_x = power_checked(k, static_cast<std::uint32_t>(m * n));
                        const std::uint64_t total_y = power_checked(k, static_cast<std::uint32_t>(mp * np));
                        const std::uint64_t step_x =
                            k <= 3 ? 1 : std::max<std::uint64_t>(1, total_x / 7);
                        const std::uint64_t step_y =
                            k <= 3 ? 1 : std::max<std::uint64_t>(1, total_y / 7);
                        for (std::uint64_t ex = 0; ex < total_x; ex += step_x) {
                            std::vector<std::uint32_t> dx(m * n);
                            decode_tuple(ex, k, dx);
                            const RigMatrix x(rig, m, n,
                                              std::vector<RigValue>(dx.begin(), dx.end()));
                            for (std::uint64_t ey = 0; ey < total_y; ey += step_y) {
                                std::vector<std::uint32_t> dy(mp * np);
                                decode_tuple(ey, k, dy);
                                const RigMatrix y(rig, mp, np,
                                                  std::vector<RigValue>(dy.begin(), dy.end()));
                                CHECK(matrices_commute(x, y) ==
                                      multiop_commutes(multiop_from_matrix(x, Side::left),
                                                       multiop_from_matrix(y, Side::left)));
                            }
                        }
                    }
    }
}
