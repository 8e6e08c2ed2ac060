#include "clonelab/checks.hpp"

#include "clonelab/ordered.hpp"

namespace clonelab::checks {

namespace {

struct ArityLine {
    std::uint32_t arity;
    std::uint64_t expected;
    std::uint64_t actual;
    bool equal_sets;
};

Json line_to_json(const ArityLine& line) {
    return Json{{"arity", line.arity},
                {"expected", line.expected},
                {"actual", line.actual},
                {"equal", line.equal_sets}};
}

Json report(const std::string& name, const Json& params, const std::vector<ArityLine>& lines) {
    bool pass = true;
    Json jlines = Json::array();
    for (const ArityLine& line : lines) {
        pass = pass && line.equal_sets && line.expected == line.actual;
        jlines.push_back(line_to_json(line));
    }
    return Json{{"schema", 1}, {"check", name}, {"params", params}, {"arities", jlines},
                {"pass", pass}};
}

ArityLine compare_commutant_to_slice(const GeneratorSet& gens, const TheoryName& expected_theory,
                                     std::uint32_t arity, std::uint64_t expected_count_value,
                                     SearchLimits limits) {
    const CommutantResult got = commutant(gens, arity, limits);
    const CloneSlice want = theory_slice(expected_theory, arity);
    return ArityLine{arity, expected_count_value, got.slice.ops.size(),
                     clones_equal_at_arity(got.slice, want)};
}

} // namespace

Json balanced_slat(SearchLimits limits) {
    const auto gens = GeneratorSet::of(2, {bool2_join(), bool2_const(0)});
    const TheoryName modules = TheoryName::of(TheoryTag::mat_left, rig_bool2());
    std::vector<ArityLine> lines;
    for (std::uint32_t n = 0; n <= 3; ++n)
        lines.push_back(
            compare_commutant_to_slice(gens, modules, n, power_checked(2, n), limits));
    return report("balanced-slat", Json::object(), lines);
}

Json uslat_top(SearchLimits limits) {
    const auto join_only = GeneratorSet::of(2, {bool2_join()});
    const auto with_tops = GeneratorSet::of(2, {bool2_join(), bool2_const(0), bool2_const(1)});
    const TheoryName slat_top = TheoryName::of(TheoryTag::slat_with_top, rig_bool2());
    const TheoryName affine = TheoryName::of(TheoryTag::mat_affine, rig_bool2());

    std::vector<ArityLine> forward, reverse;
    for (std::uint32_t n = 0; n <= 3; ++n) {
        forward.push_back(compare_commutant_to_slice(join_only, slat_top, n,
                                                     power_checked(2, n) + 1, limits));
        reverse.push_back(compare_commutant_to_slice(with_tops, affine, n,
                                                     power_checked(2, n) - 1, limits));
    }

    bool pass = true;
    Json jforward = Json::array(), jreverse = Json::array();
    for (const ArityLine& line : forward) {
        pass = pass && line.equal_sets && line.expected == line.actual;
        jforward.push_back(line_to_json(line));
    }
    for (const ArityLine& line : reverse) {
        pass = pass && line.equal_sets && line.expected == line.actual;
        jreverse.push_back(line_to_json(line));
    }
    return Json{{"schema", 1},
                {"check", "uslat-top"},
                {"params", Json::object()},
                {"forward", jforward},
                {"reverse", jreverse},
                {"pass", pass}};
}

Json ring_affine(std::uint32_t m, SearchLimits limits) {
    const RigHandle ring = rig_zmod(m);
    const auto gens = theory_generators(TheoryName::of(TheoryTag::mat_affine, ring));
    const TheoryName pointed = TheoryName::of(TheoryTag::pointed_right_module, ring);
    std::vector<ArityLine> lines;
    for (std::uint32_t n = 0; n <= 2; ++n)
        lines.push_back(
            compare_commutant_to_slice(gens, pointed, n, power_checked(m, n + 1), limits));
    return report("ring-affine", Json{{"mod", m}}, lines);
}

Json modules_mutual(std::uint32_t m, SearchLimits limits) {
    const RigHandle ring = rig_zmod(m);
    const auto left_gens = theory_generators(TheoryName::of(TheoryTag::mat_left, ring));
    const auto right_gens = theory_generators(TheoryName::of(TheoryTag::mat_right, ring));
    const TheoryName left = TheoryName::of(TheoryTag::mat_left, ring);
    const TheoryName right = TheoryName::of(TheoryTag::mat_right, ring);

    std::vector<ArityLine> lines;
    for (std::uint32_t n = 0; n <= 2; ++n) {
        lines.push_back(compare_commutant_to_slice(left_gens, right, n, power_checked(m, n),
                                                   limits));
        lines.push_back(compare_commutant_to_slice(right_gens, left, n, power_checked(m, n),
                                                   limits));
    }
    return report("modules-mutual", Json{{"mod", m}}, lines);
}

Json saturation(SearchLimits limits) {
    const auto join_only = GeneratorSet::of(2, {bool2_join()});
    std::vector<OpTable> collected;
    for (std::uint32_t a = 0; a <= 2; ++a) {
        const CloneSlice slice = commutant(join_only, a, limits).slice;
        collected.insert(collected.end(), slice.ops.begin(), slice.ops.end());
    }
    const auto double_gens = GeneratorSet::of(2, std::move(collected));

    std::vector<ArityLine> lines;
    for (std::uint32_t n = 0; n <= 3; ++n) {
        const CloneSlice twice = commutant(double_gens, n, limits).slice;
        const CloneSlice generated = generate_clone(join_only, n);
        lines.push_back(ArityLine{n, generated.ops.size(), twice.ops.size(),
                                  clones_equal_at_arity(twice, generated)});
    }
    return report("saturation", Json::object(), lines);
}

Json dadic_identity(long d) {
    bool pass = true;
    Json cases = Json::array();
    for (unsigned long m = 0; m <= 10; ++m) {
        const bool ok = common_difference_identity(d, m);
        pass = pass && ok;
        cases.push_back(Json{{"m", m}, {"holds", ok}});
    }
    return Json{{"schema", 1},
                {"check", "dadic-identity"},
                {"params", Json{{"base", d}}},
                {"cases", cases},
                {"pass", pass}};
}

Json mutual(const TheoryName& left, const TheoryName& right, std::uint32_t max_arity,
            SearchLimits limits) {
    const auto left_gens = theory_generators(left);
    const auto right_gens = theory_generators(right);

    bool pass = true;
    Json jlines = Json::array();
    for (std::uint32_t n = 0; n <= max_arity; ++n) {
        const CloneSlice left_commutant = commutant(left_gens, n, limits).slice;
        const CloneSlice right_slice = theory_slice(right, n);
        const CloneSlice right_commutant = commutant(right_gens, n, limits).slice;
        const CloneSlice left_slice = theory_slice(left, n);
        const bool forward = clones_equal_at_arity(left_commutant, right_slice);
        const bool backward = clones_equal_at_arity(right_commutant, left_slice);
        pass = pass && forward && backward;
        jlines.push_back(Json{{"arity", n},
                              {"left_commutant_count", left_commutant.ops.size()},
                              {"right_slice_count", right_slice.ops.size()},
                              {"forward_equal", forward},
                              {"right_commutant_count", right_commutant.ops.size()},
                              {"left_slice_count", left_slice.ops.size()},
                              {"backward_equal", backward}});
    }
    return Json{{"schema", 1},
                {"check", "mutual"},
                {"params", Json{{"left", theory_to_string(left)},
                                {"right", theory_to_string(right)},
                                {"max_arity", max_arity}}},
                {"arities", jlines},
                {"pass", pass}};
}

Json run_all(SearchLimits limits) {
    Json reports = Json::array();
    reports.push_back(balanced_slat(limits));
    reports.push_back(uslat_top(limits));
    reports.push_back(ring_affine(2, limits));
    reports.push_back(ring_affine(3, limits));
    reports.push_back(modules_mutual(2, limits));
    reports.push_back(modules_mutual(3, limits));
    reports.push_back(modules_mutual(4, limits));
    reports.push_back(saturation(limits));
    reports.push_back(dadic_identity(2));
    reports.push_back(dadic_identity(3));
    reports.push_back(dadic_identity(5));

    bool pass = true;
    for (const Json& r : reports)
        pass = pass && r.at("pass").get<bool>();
    return Json{{"schema", 1}, {"check", "all"}, {"checks", reports}, {"pass", pass}};
}

} // namespace clonelab::checks
