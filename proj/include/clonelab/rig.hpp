#pragma once

#include "clonelab/bigint.hpp"
#include "clonelab/dadic.hpp"
#include "clonelab/errors.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace clonelab {

/// A value of some rig: a carrier index for finite rigs, an exact integer,
/// or a d-adic fraction.  Values carry no rig context of their own; the
/// owning RigHandle interprets them.
using RigValue = std::variant<std::uint32_t, BigInt, Dadic>;

/// Finite rig presented by complete operation tables.  Carrier elements
/// are the indices 0..size-1; `zero` and `one` are designated indices and
/// need not be 0 and 1, so arbitrary user-entered tables are accepted.
struct FiniteRig {
    std::uint32_t size = 0;
    std::vector<std::uint32_t> add; // row-major size x size
    std::vector<std::uint32_t> mul; // row-major size x size
    std::uint32_t zero = 0;
    std::uint32_t one = 0;

    std::uint32_t add_at(std::uint32_t a, std::uint32_t b) const { return add[a * size + b]; }
    std::uint32_t mul_at(std::uint32_t a, std::uint32_t b) const { return mul[a * size + b]; }

    friend bool operator==(const FiniteRig&, const FiniteRig&) = default;
};

struct AxiomViolation {
    std::string axiom;
    std::vector<std::uint32_t> witness;
};

struct ValidationReport {
    bool ok = true;
    std::vector<AxiomViolation> violations;
};

/// Checks every rig axiom exhaustively over the finite carrier: both
/// monoid structures, commutativity of addition, two-sided
/// distributivity, and two-sided annihilation by zero.  Each failed axiom
/// is reported once, with a witness tuple.
///
/// Size/table inconsistencies and out-of-range entries are structural
/// errors, not axiom failures.
ValidationReport validate_rig(const FiniteRig& candidate);

enum class RigKind { finite, integers, d_adic };

/// Immutable rig backend.  Handles are shared freely; every operation is
/// safe for concurrent use.
class Rig {
public:
    RigKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == RigKind::finite; }
    bool is_ring() const { return is_ring_; }
    bool is_commutative() const { return is_commutative_; }
    const std::string& name() const { return name_; }

    /// Carrier size; only defined for finite rigs.
    std::uint32_t size() const;
    const FiniteRig& tables() const;
    long dadic_base() const;

    RigValue zero() const;
    RigValue one() const;
    RigValue add(const RigValue& a, const RigValue& b) const;
    RigValue mul(const RigValue& a, const RigValue& b) const;
    /// Additive inverse; domain error unless is_ring().
    RigValue neg(const RigValue& a) const;
    bool eq(const RigValue& a, const RigValue& b) const;

    /// Structural identity of rigs: same kind and same tables/base.
    bool equals(const Rig& other) const;

    std::string value_str(const RigValue& v) const;
    RigValue value_from_string(const std::string& text) const;

private:
    friend std::shared_ptr<const Rig> make_finite_rig(FiniteRig, std::string);
    friend std::shared_ptr<const Rig> rig_integers();
    friend std::shared_ptr<const Rig> rig_dadic(long d);

    Rig() = default;

    std::uint32_t idx(const RigValue& v) const;
    const Dadic& dd(const RigValue& v) const;
    const BigInt& zz(const RigValue& v) const;

    RigKind kind_ = RigKind::finite;
    FiniteRig tables_{};
    long dadic_base_ = 0;
    bool is_ring_ = false;
    bool is_commutative_ = false;
    std::string name_;
};

using RigHandle = std::shared_ptr<const Rig>;

/// Wraps validated tables in a handle; throws StructuralError when the
/// tables are inconsistent and DomainError when an axiom fails.
/// is_ring/is_commutative are computed here once and cached.
RigHandle make_finite_rig(FiniteRig tables, std::string name = "");

RigHandle rig_bool2();
RigHandle rig_zmod(std::uint32_t m);
RigHandle rig_integers();
RigHandle rig_dadic(long d);

/// Resolves "bool2", "zmod<m>" / "zmod(<m>)", "int" / "integers",
/// "dadic<d>" / "d_adic(<d>)".
RigHandle standard_rig(const std::string& name);

/// Same carrier and addition, multiplication arguments swapped.  Applying
/// it twice restores the original tables.
RigHandle opposite_rig(const RigHandle& rig);

/// n-fold sum of one (additive inverse of it for negative n).  Negative n
/// into a carrier without additive inverses is a domain error.
RigValue embed_integer(const Rig& rig, long n);
inline RigValue embed_integer(const RigHandle& rig, long n) { return embed_integer(*rig, n); }

} // namespace clonelab
