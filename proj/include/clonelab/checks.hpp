#pragma once

#include "clonelab/clone.hpp"
#include "clonelab/json_io.hpp"
#include "clonelab/theories.hpp"

namespace clonelab::checks {

/// Each check runs one theorem reproduction at desk scale and returns a
/// JSON report with per-arity expected/actual counts, set-equality
/// verdicts, and a top-level "pass".  Reports are built from canonically
/// sorted data only, so their serialized bytes are stable across runs.

/// commutant({join2, const0}) reproduces the module slices on the
/// two-element carrier, arities 0..3, counts 2^n.
Json balanced_slat(SearchLimits limits = {});

/// commutant({join2}) is the join-preserving family with a top constant
/// (counts 2^n + 1), and commutant({join2, const0, const1}) is the
/// nonzero-row family (counts 2^n - 1, empty at arity 0); arities 0..3.
Json uslat_top(SearchLimits limits = {});

/// Over zmod(m): the commutant of the affine presentation equals the
/// pointed-module slices, counts m^(1+n), arities 0..2.
Json ring_affine(std::uint32_t m, SearchLimits limits = {});

/// Over zmod(m): left-module and right-module slices are each other's
/// commutants, arities 0..2.
Json modules_mutual(std::uint32_t m, SearchLimits limits = {});

/// The double commutant of {join2} (commutant slices at arities <= 2
/// taken as generators) reproduces generate_clone({join2}), arities 0..3.
Json saturation(SearchLimits limits = {});

/// The exact three-term affine combination expressing m+1 holds in the
/// d-adic fractions for m = 0..10.
Json dadic_identity(long d);

/// Both directions of a mutual-commutant claim between two named
/// theories, arities 0..max_arity.
Json mutual(const TheoryName& left, const TheoryName& right, std::uint32_t max_arity,
            SearchLimits limits = {});

/// The fixed roster behind `check all`: balanced-slat, uslat-top,
/// ring-affine(2,3), modules-mutual(2,3,4), saturation,
/// dadic-identity(2,3,5).
Json run_all(SearchLimits limits = {});

} // namespace clonelab::checks
