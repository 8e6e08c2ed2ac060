#pragma once

#include "clonelab/rig.hpp"

#include <cstddef>
#include <vector>

namespace clonelab {

/// Dense matrix over a rig, row-major.  An m x n matrix is read as a
/// morphism n -> m of the matrix theory over its rig, so composition is
/// plain matrix multiplication.  Matrices with zero rows or zero columns
/// are legal everywhere; empty sums are the rig zero.
class RigMatrix {
public:
    RigMatrix(RigHandle rig, std::size_t rows, std::size_t cols)
        : rig_(std::move(rig)), rows_(rows), cols_(cols),
          entries_(rows * cols, rig_->zero()) {}

    RigMatrix(RigHandle rig, std::size_t rows, std::size_t cols, std::vector<RigValue> entries);

    static RigMatrix identity(const RigHandle& rig, std::size_t n);
    static RigMatrix row(const RigHandle& rig, std::vector<RigValue> entries);

    const RigHandle& rig() const { return rig_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const RigValue& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    RigValue& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const std::vector<RigValue>& entries() const { return entries_; }

private:
    RigHandle rig_;
    std::size_t rows_, cols_;
    std::vector<RigValue> entries_;
};

/// Entrywise equality; matrices over structurally different rigs are not equal.
bool matrices_equal(const RigMatrix& a, const RigMatrix& b);

/// C[i][j] = sum_t A[i][t] * B[t][j] in the rig.
RigMatrix mat_mul(const RigMatrix& a, const RigMatrix& b);

/// First Kronecker product of X (j' x j) and Y (k' x k): the
/// (j'k') x (jk) matrix whose entry at row <u,s>, column <v,t> is
/// Y[s][t] * X[u][v], under the index encoding <v,t> = v + j*t.
/// This is the classical Kronecker product of Y by X.
RigMatrix kron_first(const RigMatrix& x, const RigMatrix& y);

/// Second Kronecker product: entry at row <u,s>, column <v,t> is
/// X[u][v] * Y[s][t].  Coincides with kron_first exactly when the two
/// entry products agree, e.g. over any commutative rig.
RigMatrix kron_second(const RigMatrix& x, const RigMatrix& y);

/// The two power-cone block matrices whose composite reproduces
/// kron_first: right_power_block(X, k) has entry X[u][v] at
/// (<u,t1>, <v,t2>) when t1 = t2 and zero otherwise, and
/// left_power_block(jp, Y) has entry Y[s][t] at (<u1,s>, <u2,t>) when
/// u1 = u2.  kron_first_via_blocks composes them; it exists as an
/// independent construction of the same morphism and is compared against
/// the entry formula in the test suites.
RigMatrix right_power_block(const RigMatrix& x, std::size_t k);
RigMatrix left_power_block(std::size_t jp, const RigMatrix& y);
RigMatrix kron_first_via_blocks(const RigMatrix& x, const RigMatrix& y);

/// True iff the first and second Kronecker products agree entrywise.
bool matrices_commute(const RigMatrix& x, const RigMatrix& y);

/// True iff every row sums to one.  A matrix with zero columns and at
/// least one row is affine only when zero = one in the rig.
bool is_affine_matrix(const RigMatrix& a);

/// Transpose, read over the opposite rig; contravariant on products.
RigMatrix transpose_to_opposite(const RigMatrix& a);

} // namespace clonelab
