#include "clonelab/ordered.hpp"

namespace clonelab {

namespace {

void validate_cone(const Rig& ring, const std::vector<bool>& cone) {
    const std::uint32_t k = ring.size();
    if (cone.size() != k)
        throw StructuralError("cone mask size does not match carrier");
    const auto in = [&](const RigValue& v) { return cone[std::get<std::uint32_t>(v)]; };
    if (!in(ring.zero()) || !in(ring.one()))
        throw StructuralError("positive cone must contain zero and one");
    for (std::uint32_t a = 0; a < k; ++a) {
        if (!cone[a])
            continue;
        for (std::uint32_t b = 0; b < k; ++b) {
            if (!cone[b])
                continue;
            if (!in(ring.add(a, b)))
                throw StructuralError("positive cone not closed under addition");
            if (!in(ring.mul(a, b)))
                throw StructuralError("positive cone not closed under multiplication");
        }
    }
}

} // namespace

PreorderedRing PreorderedRing::natural_order(RigHandle exact_ring) {
    if (!exact_ring || exact_ring->is_finite())
        throw StructuralError("natural_order expects an exact carrier; finite rings take a cone");
    return PreorderedRing(std::move(exact_ring), {});
}

PreorderedRing PreorderedRing::with_cone(RigHandle finite_ring, std::vector<bool> cone) {
    if (!finite_ring || !finite_ring->is_finite())
        throw StructuralError("with_cone expects a finite carrier");
    if (!finite_ring->is_ring())
        throw DomainError("preordered rings need additive inverses; " + finite_ring->name() +
                          " is not a ring");
    validate_cone(*finite_ring, cone);
    return PreorderedRing(std::move(finite_ring), std::move(cone));
}

bool PreorderedRing::is_positive(const RigValue& v) const {
    switch (ring_->kind()) {
    case RigKind::finite: return cone_[std::get<std::uint32_t>(v)];
    case RigKind::integers: return std::get<BigInt>(v) >= 0;
    case RigKind::d_adic: return std::get<Dadic>(v).is_nonneg();
    }
    throw Error("unreachable");
}

bool PreorderedRing::leq(const RigValue& a, const RigValue& b) const {
    return is_positive(ring_->add(b, ring_->neg(a)));
}

bool PreorderedRing::is_archimedean() const {
    if (!ring_->is_finite())
        return true; // integers and d-adic fractions under their natural order

    // r, 2r, 3r, ... cycles in a finite ring; bounded means some b lies
    // above every multiple.
    const std::uint32_t k = ring_->size();
    for (std::uint32_t r = 0; r < k; ++r) {
        std::vector<bool> multiples(k, false);
        RigValue acc = ring_->zero();
        while (!multiples[std::get<std::uint32_t>(acc)]) {
            multiples[std::get<std::uint32_t>(acc)] = true;
            acc = ring_->add(acc, RigValue(r));
        }
        bool bounded = false;
        for (std::uint32_t b = 0; b < k && !bounded; ++b) {
            bool all = true;
            for (std::uint32_t y = 0; y < k; ++y)
                if (multiples[y] && !leq(RigValue(y), RigValue(b))) {
                    all = false;
                    break;
                }
            bounded = all;
        }
        if (bounded && !leq(RigValue(r), ring_->zero()))
            return false;
    }
    return true;
}

SampledMap SampledMap::of(RigHandle rig, std::uint32_t arity, RigValue at_zero,
                          std::vector<RigValue> at_basis,
                          std::vector<std::pair<std::vector<RigValue>, RigValue>> probes) {
    if (at_basis.size() != arity)
        throw StructuralError("sampled map needs one basis value per argument");
    for (const auto& [x, value] : probes)
        if (x.size() != arity)
            throw StructuralError("probe tuple length does not match arity");
    return SampledMap{arity, std::move(rig), std::move(at_zero), std::move(at_basis),
                      std::move(probes)};
}

RigValue phi_w(const Rig& rig, std::span<const RigValue> w, std::span<const RigValue> x) {
    if (w.size() != x.size() + 1)
        throw StructuralError("coefficient vector must have length 1 + arity");
    RigValue acc = w[0];
    for (std::size_t i = 0; i < x.size(); ++i)
        acc = rig.add(acc, rig.mul(x[i], w[i + 1]));
    return acc;
}

std::vector<RigValue> w_of_phi(const Rig& ring, const SampledMap& phi) {
    if (!ring.is_ring())
        throw DomainError("recovering coefficients needs additive inverses");
    std::vector<RigValue> w;
    w.reserve(phi.arity + 1);
    w.push_back(phi.at_zero);
    for (const RigValue& at_b : phi.at_basis)
        w.push_back(ring.add(at_b, ring.neg(phi.at_zero)));
    return w;
}

AffineExtensionResult affine_extension_check(const PreorderedRing& ring, const SampledMap& phi) {
    const Rig& r = *ring.ring();
    // the sampled map claims to be R_+^n -> R_+; hold it to that
    if (!ring.is_positive(phi.at_zero))
        throw StructuralError("sampled value at zero lies outside the positive part");
    for (const RigValue& v : phi.at_basis)
        if (!ring.is_positive(v))
            throw StructuralError("sampled basis value lies outside the positive part");
    for (const auto& [x, value] : phi.probes) {
        for (const RigValue& coordinate : x)
            if (!ring.is_positive(coordinate))
                throw StructuralError("probe tuple leaves the positive part");
        if (!ring.is_positive(value))
            throw StructuralError("probe value lies outside the positive part");
    }
    const std::vector<RigValue> w = w_of_phi(r, phi);
    for (const auto& [x, sampled] : phi.probes) {
        const RigValue predicted = phi_w(r, w, x);
        if (!r.eq(sampled, predicted))
            return AffineExtensionResult{false,
                                         AffineExtensionViolation{x, sampled, predicted}};
    }
    return AffineExtensionResult{};
}

AutoArchimedeanResult auto_archimedean_finite(const PreorderedRing& ring) {
    if (!ring.ring()->is_finite())
        throw DomainError("auto-archimedean decision requires a finite carrier; "
                          "exact carriers are known instances");
    const Rig& r = *ring.ring();
    const std::uint32_t k = r.size();
    for (std::uint32_t elem = 0; elem < k; ++elem) {
        std::vector<bool> ray(k, false);
        for (std::uint32_t s = 0; s < k; ++s)
            if (ring.cone()[s])
                ray[std::get<std::uint32_t>(r.mul(RigValue(s), RigValue(elem)))] = true;
        bool bounded = false;
        for (std::uint32_t b = 0; b < k && !bounded; ++b) {
            bool all = true;
            for (std::uint32_t y = 0; y < k; ++y)
                if (ray[y] && !ring.leq(RigValue(y), RigValue(b))) {
                    all = false;
                    break;
                }
            bounded = all;
        }
        if (bounded && !ring.leq(RigValue(elem), r.zero()))
            return AutoArchimedeanResult{false, elem};
    }
    return AutoArchimedeanResult{};
}

std::vector<std::vector<bool>> enumerate_positive_cones(const RigHandle& finite_ring) {
    const Rig& r = *finite_ring;
    const std::uint32_t k = r.size();
    if (k > 20)
        throw ResourceError("cone enumeration over 2^" + std::to_string(k) + " subsets", 0, 0);
    std::vector<std::vector<bool>> cones;
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        std::vector<bool> cone(k, false);
        for (std::uint32_t i = 0; i < k; ++i)
            cone[i] = (mask >> i) & 1;
        try {
            validate_cone(r, cone);
        } catch (const StructuralError&) {
            continue;
        }
        cones.push_back(std::move(cone));
    }
    return cones;
}

unsigned order_unit_exponent(const Dadic& x) {
    if (!x.is_nonneg())
        throw DomainError("order-unit exponent is defined for nonnegative values");
    const Dadic base_power_0(x.base(), 1);
    Dadic power = base_power_0;
    const Dadic d(x.base(), x.base());
    unsigned e = 0;
    while (!leq(x, power)) {
        power = power * d;
        ++e;
    }
    return e;
}

bool common_difference_identity(long d, unsigned long m) {
    if (d < 2)
        throw ParameterError("base must be at least 2");
    const Dadic inv_d(d, 1, 1);              // 1/d
    const Dadic mid(d, BigInt(d) - 2, 1);    // (d-2)/d
    const Dadic m0(d, BigInt(static_cast<unsigned long>(m)));
    const Dadic m1 = m0 + Dadic(d, 1);
    const Dadic m2 = m1 + Dadic(d, 1);

    const Dadic combination = inv_d * m0 + mid * m1 + inv_d * m2;
    const Dadic coefficient_sum = inv_d + mid + inv_d;
    const bool coefficients_positive = inv_d.is_nonneg() && mid.is_nonneg();
    return combination == m1 && coefficient_sum == Dadic(d, 1) && coefficients_positive;
}

} // namespace clonelab
