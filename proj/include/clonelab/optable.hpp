#pragma once

#include "clonelab/matrix.hpp"
#include "clonelab/rig.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace clonelab {

/// Total n-ary operation on the finite carrier {0..k-1}, stored as a flat
/// array of k^n outputs.
///
/// Inputs are enumerated in little-endian radix-k order: a tuple
/// (x_0,...,x_{n-1}) lives at index sum x_i * k^i, so the first
/// coordinate varies fastest.  For n = 2 this is the same pairing
/// <v,t> = v + k*t that the matrix module uses for Kronecker products;
/// the two kinds of object must share one encoding or Kronecker/operation
/// comparisons silently skew.  The ordering is part of the serialized
/// contract, so outputs arrays are diffable across runs.
struct OpTable {
    std::uint32_t carrier = 0;
    std::uint32_t arity = 0;
    std::vector<std::uint32_t> outputs; // length carrier^arity

    std::uint32_t eval(std::span<const std::uint32_t> args) const;

    friend bool operator==(const OpTable&, const OpTable&) = default;
};

/// Deterministic total order: by carrier, arity, then lexicographic on
/// the outputs array.  Used everywhere a canonical listing is needed.
bool optable_less(const OpTable& a, const OpTable& b);

/// k^n as a size_t, guarding against overflow of addressable table sizes.
std::uint64_t power_checked(std::uint32_t base, std::uint32_t exponent);

/// Little-endian radix-k value of a tuple of carrier indices.
std::uint64_t encode_tuple(std::span<const std::uint32_t> digits, std::uint32_t k);

/// Inverse of encode_tuple; writes n digits.
void decode_tuple(std::uint64_t index, std::uint32_t k, std::span<std::uint32_t> digits_out);

/// The i-th of the n designated projections on a carrier of size k.
OpTable projection(std::uint32_t n, std::uint32_t i, std::uint32_t k);

/// Constant operation of the given arity.
OpTable constant_op(std::uint32_t k, std::uint32_t value, std::uint32_t arity = 0);

/// Superposition: (compose(outer, inners))(x) = outer(inners[0](x), ...).
/// All inners share one arity; when outer is nullary the result arity
/// cannot be inferred from the inners, so it must be passed explicitly.
OpTable compose(const OpTable& outer, std::span<const OpTable> inners,
                std::optional<std::uint32_t> arity_if_nullary = std::nullopt);

enum class Side { left, right };

/// Operation induced by a 1 x n row vector w over a finite rig:
/// left picks x -> sum w_i * x_i, right picks x -> sum x_i * w_i.
/// The two coincide exactly over commutative rigs.
OpTable op_from_row(const RigMatrix& w, Side side);

/// Operation induced by a 1 x (1+n) vector w over a finite rig:
/// x -> w_0 + sum x_i * w_i.  With n = 0 this is the constant w_0.
/// Distinct vectors may induce equal tables over rigs whose addition is
/// not cancellative.
OpTable op_pointed(const RigMatrix& w);

/// A finite family of same-arity operations on one carrier, read as a
/// single map carrier^n -> carrier^m.  Zero components are legal (the
/// unique map into the empty power).
struct MultiOp {
    std::uint32_t carrier = 0;
    std::uint32_t arity = 0;
    std::vector<OpTable> components;

    static MultiOp of(std::uint32_t carrier, std::uint32_t arity, std::vector<OpTable> components);
};

/// Components of a matrix over a finite rig, as row operations.
MultiOp multiop_from_matrix(const RigMatrix& m, Side side);

} // namespace clonelab
