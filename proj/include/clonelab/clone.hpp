#pragma once

#include "clonelab/optable.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace clonelab {

/// A finite set of operations on one carrier, presenting the subtheory
/// they generate.
struct GeneratorSet {
    std::uint32_t carrier = 0;
    std::vector<OpTable> generators;

    static GeneratorSet of(std::uint32_t carrier, std::vector<OpTable> generators);
};

/// All operations of one arity in some clone, canonically sorted
/// (lexicographic on outputs) with no duplicates, so two slices are equal
/// exactly when their listings are identical.
struct CloneSlice {
    std::uint32_t carrier = 0;
    std::uint32_t arity = 0;
    std::vector<OpTable> ops;

    bool contains(const OpTable& op) const;
    static CloneSlice of(std::uint32_t carrier, std::uint32_t arity, std::vector<OpTable> ops);
};

/// Commutation of finitary operations mu (arity j) and nu (arity k):
/// for every j x k grid of carrier elements, applying mu down the columns
/// and then nu to the k results must agree with applying nu along the
/// rows and then mu to the j results.
///
/// The degenerate arities are forced by the same grids: two constants
/// commute iff they are equal, and a constant c commutes with mu iff
/// mu(c,...,c) = c.
bool op_commutes(const OpTable& mu, const OpTable& nu);

/// First violating grid in enumeration order, row-major j x k, or nullopt
/// when the operations commute.
std::optional<std::vector<std::uint32_t>> op_commutes_witness(const OpTable& mu,
                                                              const OpTable& nu);

/// Multi-operations commute iff every pair of components commutes; this
/// reduction is itself checked against the direct grid maps in the tests.
bool multiop_commutes(const MultiOp& mu, const MultiOp& nu);

struct SearchLimits {
    /// Maximum number of candidate-table node visits before the search
    /// aborts with a ResourceError.  Exceeding the budget is a loud
    /// failure, never a truncated answer.
    std::uint64_t node_budget = 100'000'000;
};

struct CommutantResult {
    CloneSlice slice;
    std::uint64_t visited = 0;
};

/// All arity-n operations commuting with every generator, computed by
/// depth-first backtracking over the outputs array in tuple-encoding
/// order.  Every commutation grid is checked as soon as the prefix of the
/// candidate table determines all evaluations it needs, so contradictions
/// prune whole subtrees; the full constraint set has been checked by the
/// time a leaf is emitted.  Results come out already in canonical order.
///
/// The n projections always belong to the result: projections commute
/// with everything.
CommutantResult commutant(const GeneratorSet& gens, std::uint32_t arity, SearchLimits limits = {});

/// Reference implementation: filter all carrier^(carrier^n) tables by
/// op_commutes.  Exists as an independent oracle for the backtracking
/// search; only usable at very small carrier/arity.
CloneSlice commutant_by_enumeration(const GeneratorSet& gens, std::uint32_t arity);

/// The arity-n slice of the clone generated by `gens`: least set of
/// arity-n tables containing all projections and all generator minors
/// (generators composed with projections), closed under composing a
/// generator with already-found members.  Works one arity at a time, so
/// memory stays bounded by a single slice.
CloneSlice generate_clone(const GeneratorSet& gens, std::uint32_t arity);

/// Identical sorted listings; carrier or arity mismatch is a structural error.
bool clones_equal_at_arity(const CloneSlice& a, const CloneSlice& b);

} // namespace clonelab
