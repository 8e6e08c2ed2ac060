#pragma once

#include "clonelab/clone.hpp"
#include "clonelab/rig.hpp"

#include <cstdint>
#include <string>

namespace clonelab {

/// Named theory presentations over a finite rig carrier.
///
/// mat_left / mat_right are the operations x -> sum w_i*x_i and
/// x -> sum x_i*w_i induced by row vectors; mat_affine keeps only rows
/// summing to one; pointed_right_module takes x -> w_0 + sum x_i*w_i over
/// vectors of length 1+n; uslat and slat_with_top are the semilattice
/// families on the two-element carrier; fincard_op is projections only;
/// full_set_theory is every table.
enum class TheoryTag {
    full_set_theory,
    fincard_op,
    mat_left,
    mat_right,
    mat_affine,
    pointed_right_module,
    uslat,
    slat_with_top,
};

struct TheoryName {
    TheoryTag tag;
    RigHandle rig; // finite

    static TheoryName of(TheoryTag tag, RigHandle rig);
};

/// Parses CLI strings: "mat-left@zmod4", "mat-right@zmod3", "aff@bool2",
/// "pointed@zmod3", "uslat", "slat-top", "fincard", "full@bool2".
/// Bare names default to the bool2 carrier.
TheoryName parse_theory(const std::string& text);
std::string theory_to_string(const TheoryName& t);

/// Exact arity-n slice of the named theory's operations on its carrier,
/// as canonically sorted tables.  Slices are sets of maps, so vectors
/// inducing equal tables are deduplicated.  `table_budget` caps how many
/// tables an enumeration-backed slice may touch.
CloneSlice theory_slice(const TheoryName& t, std::uint32_t arity,
                        std::uint64_t table_budget = 1u << 24);

/// A finite generator set whose generated slices reproduce theory_slice
/// at small arities; the adequacy of each presentation is itself covered
/// by tests.  Not every tag has a presentation: mat_affine is only
/// supported over ring carriers (the ternary x - y + z generator) and
/// over bool2 (binary join), and full_set_theory has none here.
GeneratorSet theory_generators(const TheoryName& t);

/// Predicted slice size.
std::uint64_t expected_count(const TheoryName& t, std::uint32_t arity);

/// join2, const0, const1 on the two-element carrier; shared by several
/// presentations and by the check suites.
OpTable bool2_join();
OpTable bool2_const(std::uint32_t value, std::uint32_t arity = 0);

/// The ternary Mal'cev operation x - y + z on a finite ring carrier.
OpTable malcev_op(const RigHandle& ring);

} // namespace clonelab
