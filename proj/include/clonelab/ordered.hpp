#pragma once

#include "clonelab/dadic.hpp"
#include "clonelab/rig.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace clonelab {

/// A ring together with a positive cone: a subset containing zero and one
/// and closed under addition and multiplication (a subrig).  The cone
/// induces the preorder a <= b iff b - a is in the cone.
///
/// Finite carriers take an explicit cone mask, validated at construction.
/// The exact carriers (integers, d-adic fractions) take their natural
/// order, where positivity is a sign test.
class PreorderedRing {
public:
    static PreorderedRing natural_order(RigHandle exact_ring);
    static PreorderedRing with_cone(RigHandle finite_ring, std::vector<bool> cone);

    const RigHandle& ring() const { return ring_; }
    const std::vector<bool>& cone() const { return cone_; }

    bool is_positive(const RigValue& v) const;
    bool leq(const RigValue& a, const RigValue& b) const;

    /// Archimedean in the n-multiples sense.  For the exact carriers this
    /// is a known-instance fact (both embed in the ordered reals); for
    /// finite carriers it is decided by enumeration.
    bool is_archimedean() const;

private:
    PreorderedRing(RigHandle ring, std::vector<bool> cone)
        : ring_(std::move(ring)), cone_(std::move(cone)) {}

    RigHandle ring_;
    std::vector<bool> cone_; // empty for exact carriers
};

/// Finitely many observations of a map phi: R_+^n -> R_+: its value at
/// the zero tuple, at each standard basis tuple, and at a list of probe
/// tuples.  All recorded tuples and values are expected to lie in the
/// positive part.
struct SampledMap {
    std::uint32_t arity = 0;
    RigHandle rig;
    RigValue at_zero;
    std::vector<RigValue> at_basis;
    std::vector<std::pair<std::vector<RigValue>, RigValue>> probes;

    static SampledMap of(RigHandle rig, std::uint32_t arity, RigValue at_zero,
                         std::vector<RigValue> at_basis,
                         std::vector<std::pair<std::vector<RigValue>, RigValue>> probes);
};

/// w_0 + sum x_i * w_i, evaluated exactly in the given rig.
RigValue phi_w(const Rig& rig, std::span<const RigValue> w, std::span<const RigValue> x);

/// The coefficient vector a restriction determines when it extends:
/// (phi(0), phi(b_1) - phi(0), ..., phi(b_n) - phi(0)).  Entries may lie
/// outside the positive part; needs a ring.
std::vector<RigValue> w_of_phi(const Rig& ring, const SampledMap& phi);

struct AffineExtensionViolation {
    std::vector<RigValue> probe;
    RigValue lhs; // sampled value
    RigValue rhs; // affine prediction from w_of_phi
};

struct AffineExtensionResult {
    bool holds_on_probes = true;
    std::optional<AffineExtensionViolation> violation;
};

/// Checks each probe against the affine prediction
/// phi(0) + sum x_i * (phi(b_i) - phi(0)) exactly; reports the first
/// violation with both sides.  This is a certificate over the recorded
/// probes, not a proof over the whole positive part.
AffineExtensionResult affine_extension_check(const PreorderedRing& ring, const SampledMap& phi);

struct AutoArchimedeanResult {
    bool holds = true;
    std::optional<std::uint32_t> witness; // element whose bounded ray has r > 0
};

/// Decides, by exhaustive enumeration over a finite carrier, whether
/// every element whose left ray {s*r : s positive} has an upper bound
/// already satisfies r <= 0.
AutoArchimedeanResult auto_archimedean_finite(const PreorderedRing& ring);

/// Every subrig of a finite ring, as cone masks in increasing mask order.
std::vector<std::vector<bool>> enumerate_positive_cones(const RigHandle& finite_ring);

/// Least e with x <= d^e; certifies that 1 is an order unit for the
/// positive d-adic fractions.  Negative x is a domain error.
unsigned order_unit_exponent(const Dadic& x);

/// Verifies exactly in the d-adic fractions that
/// (1/d)m + ((d-2)/d)(m+1) + (1/d)(m+2) = m+1 and that the three
/// coefficients are positive and sum to one.
bool common_difference_identity(long d, unsigned long m);

} // namespace clonelab
