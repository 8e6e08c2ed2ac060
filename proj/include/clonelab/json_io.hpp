#pragma once

#include "clonelab/clone.hpp"
#include "clonelab/matrix.hpp"
#include "clonelab/optable.hpp"
#include "clonelab/rig.hpp"

#include <json.hpp>

#include <string>

namespace clonelab {

using Json = nlohmann::json;

/// {"size": k, "add": [[...]], "mul": [[...]], "zero": i, "one": j},
/// row-major, entries in [0, k).
Json finite_rig_to_json(const FiniteRig& rig);
FiniteRig finite_rig_from_json(const Json& j);

/// A rig reference: either a standard name string ("bool2", "zmod(5)",
/// "int", "dadic(2)") or an inline finite-rig object.
RigHandle rig_from_json(const Json& j);
Json rig_to_json(const RigHandle& rig);

/// {"k": k, "arity": n, "outputs": [...]} with outputs in tuple-encoding
/// order; that ordering is part of the format.
Json optable_to_json(const OpTable& op);
OpTable optable_from_json(const Json& j);

/// {"rig": ..., "rows": m, "cols": n, "entries": [[...]]}.  Entries are
/// carrier indices for finite rigs, integers for the integer rig, and
/// integers or "p/d^e" strings for d-adic rigs.
Json matrix_to_json(const RigMatrix& m);
RigMatrix matrix_from_json(const Json& j);

/// Entries-only form used by the CLI, where the rig arrives separately.
RigMatrix matrix_from_entries(const Json& entries, const RigHandle& rig);
Json entries_to_json(const RigMatrix& m);

Json slice_to_json(const CloneSlice& slice);

/// {"schema": 1, "carrier": ..., "arity": ..., "generators": [...],
///  "ops": [...], "count": ..., "visited": ...}
Json commutant_report(const GeneratorSet& gens, std::uint32_t arity, const CommutantResult& result);

/// Parses text as JSON, mapping parse failures to StructuralError.
Json parse_json(const std::string& text);

} // namespace clonelab
