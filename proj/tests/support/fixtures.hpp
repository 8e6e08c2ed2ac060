#pragma once

#include "clonelab/matrix.hpp"
#include "clonelab/optable.hpp"
#include "clonelab/rig.hpp"

#include <random>

namespace clonelab::testing {

/// The eight upper-triangular 2x2 matrices over the two-element field,
/// encoded as a + 2b + 4c for the matrix [[a, b], [0, c]].  The smallest
/// convenient noncommutative rig.
inline RigHandle upper_triangular_z2() {
    FiniteRig t;
    t.size = 8;
    t.add.resize(64);
    t.mul.resize(64);
    for (std::uint32_t x = 0; x < 8; ++x) {
        const std::uint32_t a = x & 1, b = (x >> 1) & 1, c = (x >> 2) & 1;
        for (std::uint32_t y = 0; y < 8; ++y) {
            const std::uint32_t a2 = y & 1, b2 = (y >> 1) & 1, c2 = (y >> 2) & 1;
            t.add[x * 8 + y] = x ^ y;
            const std::uint32_t pa = a & a2;
            const std::uint32_t pb = (a & b2) ^ (b & c2);
            const std::uint32_t pc = c & c2;
            t.mul[x * 8 + y] = pa + 2 * pb + 4 * pc;
        }
    }
    t.zero = 0;
    t.one = 5; // identity matrix: a = 1, b = 0, c = 1
    return make_finite_rig(std::move(t), "ut2(z2)");
}

/// The product ring Z/2 x Z/2, encoded as a + 2b.  Its prime subring
/// {(0,0), (1,1)} is a proper positive cone, unlike any zmod carrier.
inline RigHandle product_z2_z2() {
    FiniteRig t;
    t.size = 4;
    t.add.resize(16);
    t.mul.resize(16);
    for (std::uint32_t x = 0; x < 4; ++x)
        for (std::uint32_t y = 0; y < 4; ++y) {
            t.add[x * 4 + y] = x ^ y;
            t.mul[x * 4 + y] = x & y;
        }
    t.zero = 0;
    t.one = 3;
    return make_finite_rig(std::move(t), "z2xz2");
}

/// Three-element chain with max as addition and min as multiplication; a
/// commutative rig that is not a ring and not bool2.
inline RigHandle chain3() {
    FiniteRig t;
    t.size = 3;
    t.add.resize(9);
    t.mul.resize(9);
    for (std::uint32_t x = 0; x < 3; ++x)
        for (std::uint32_t y = 0; y < 3; ++y) {
            t.add[x * 3 + y] = std::max(x, y);
            t.mul[x * 3 + y] = std::min(x, y);
        }
    t.zero = 0;
    t.one = 2;
    return make_finite_rig(std::move(t), "chain3");
}

inline RigMatrix random_matrix(const RigHandle& rig, std::size_t rows, std::size_t cols,
                               std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, rig->size() - 1);
    RigMatrix m(rig, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = pick(rng);
    return m;
}

inline OpTable random_optable(std::uint32_t carrier, std::uint32_t arity, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, carrier - 1);
    OpTable op{carrier, arity, {}};
    op.outputs.resize(power_checked(carrier, arity));
    for (auto& out : op.outputs)
        out = pick(rng);
    return op;
}

} // namespace clonelab::testing
