#include "clonelab/optable.hpp"

#include <limits>

namespace clonelab {

std::uint64_t power_checked(std::uint32_t base, std::uint32_t exponent) {
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < exponent; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            throw ResourceError("table size " + std::to_string(base) + "^" +
                                    std::to_string(exponent) + " overflows",
                                0, 0);
        out *= base;
    }
    return out;
}

std::uint64_t encode_tuple(std::span<const std::uint32_t> digits, std::uint32_t k) {
    std::uint64_t value = 0;
    std::uint64_t weight = 1;
    for (std::uint32_t d : digits) {
        if (d >= k)
            throw StructuralError("tuple digit " + std::to_string(d) +
                                  " out of range for carrier " + std::to_string(k));
        value += weight * d;
        weight *= k;
    }
    return value;
}

void decode_tuple(std::uint64_t index, std::uint32_t k, std::span<std::uint32_t> digits_out) {
    for (auto& d : digits_out) {
        d = static_cast<std::uint32_t>(index % k);
        index /= k;
    }
}

std::uint32_t OpTable::eval(std::span<const std::uint32_t> args) const {
    if (args.size() != arity)
        throw StructuralError("operation of arity " + std::to_string(arity) + " applied to " +
                              std::to_string(args.size()) + " arguments");
    return outputs[encode_tuple(args, carrier)];
}

bool optable_less(const OpTable& a, const OpTable& b) {
    if (a.carrier != b.carrier)
        return a.carrier < b.carrier;
    if (a.arity != b.arity)
        return a.arity < b.arity;
    return a.outputs < b.outputs;
}

OpTable projection(std::uint32_t n, std::uint32_t i, std::uint32_t k) {
    if (i >= n)
        throw ParameterError("projection index " + std::to_string(i) + " out of range for arity " +
                             std::to_string(n));
    OpTable op{k, n, {}};
    const std::uint64_t total = power_checked(k, n);
    op.outputs.resize(total);
    std::vector<std::uint32_t> tuple(n);
    for (std::uint64_t e = 0; e < total; ++e) {
        decode_tuple(e, k, tuple);
        op.outputs[e] = tuple[i];
    }
    return op;
}

OpTable constant_op(std::uint32_t k, std::uint32_t value, std::uint32_t arity) {
    if (value >= k)
        throw StructuralError("constant value out of carrier range");
    OpTable op{k, arity, {}};
    op.outputs.assign(power_checked(k, arity), value);
    return op;
}

OpTable compose(const OpTable& outer, std::span<const OpTable> inners,
                std::optional<std::uint32_t> arity_if_nullary) {
    if (inners.size() != outer.arity)
        throw StructuralError("compose needs exactly " + std::to_string(outer.arity) +
                              " inner operations, got " + std::to_string(inners.size()));
    std::uint32_t n;
    if (inners.empty()) {
        if (!arity_if_nullary)
            throw StructuralError("composing a nullary operation requires an explicit arity");
        n = *arity_if_nullary;
    } else {
        n = inners.front().arity;
        if (arity_if_nullary && *arity_if_nullary != n)
            throw StructuralError("explicit arity disagrees with inner operations");
    }
    for (const OpTable& inner : inners)
        if (inner.carrier != outer.carrier || inner.arity != n)
            throw StructuralError("compose requires inner operations of one carrier and arity");

    const std::uint32_t k = outer.carrier;
    OpTable out{k, n, {}};
    const std::uint64_t total = power_checked(k, n);
    out.outputs.resize(total);
    std::vector<std::uint32_t> args(outer.arity);
    for (std::uint64_t e = 0; e < total; ++e) {
        for (std::size_t t = 0; t < inners.size(); ++t)
            args[t] = inners[t].outputs[e];
        out.outputs[e] = outer.outputs[encode_tuple(args, k)];
    }
    return out;
}

namespace {

const Rig& require_finite(const RigMatrix& w) {
    if (!w.rig()->is_finite())
        throw DomainError("operation tables require a finite carrier, rig is " + w.rig()->name());
    if (w.rows() != 1)
        throw StructuralError("coefficient vector must be a single row");
    return *w.rig();
}

} // namespace

OpTable op_from_row(const RigMatrix& w, Side side) {
    const Rig& rig = require_finite(w);
    const std::uint32_t k = rig.size();
    const std::uint32_t n = static_cast<std::uint32_t>(w.cols());
    OpTable op{k, n, {}};
    const std::uint64_t total = power_checked(k, n);
    op.outputs.resize(total);
    std::vector<std::uint32_t> x(n);
    for (std::uint64_t e = 0; e < total; ++e) {
        decode_tuple(e, k, x);
        RigValue acc = rig.zero();
        for (std::uint32_t i = 0; i < n; ++i) {
            const RigValue xi = x[i];
            acc = rig.add(acc, side == Side::left ? rig.mul(w.at(0, i), xi)
                                                  : rig.mul(xi, w.at(0, i)));
        }
        op.outputs[e] = std::get<std::uint32_t>(acc);
    }
    return op;
}

OpTable op_pointed(const RigMatrix& w) {
    const Rig& rig = require_finite(w);
    if (w.cols() < 1)
        throw StructuralError("pointed coefficient vector needs at least the constant entry");
    const std::uint32_t k = rig.size();
    const std::uint32_t n = static_cast<std::uint32_t>(w.cols() - 1);
    OpTable op{k, n, {}};
    const std::uint64_t total = power_checked(k, n);
    op.outputs.resize(total);
    std::vector<std::uint32_t> x(n);
    for (std::uint64_t e = 0; e < total; ++e) {
        decode_tuple(e, k, x);
        RigValue acc = w.at(0, 0);
        for (std::uint32_t i = 0; i < n; ++i)
            acc = rig.add(acc, rig.mul(RigValue(x[i]), w.at(0, i + 1)));
        op.outputs[e] = std::get<std::uint32_t>(acc);
    }
    return op;
}

MultiOp MultiOp::of(std::uint32_t carrier, std::uint32_t arity, std::vector<OpTable> components) {
    for (const OpTable& c : components)
        if (c.carrier != carrier || c.arity != arity)
            throw StructuralError("multi-operation components must share carrier and arity");
    return MultiOp{carrier, arity, std::move(components)};
}

MultiOp multiop_from_matrix(const RigMatrix& m, Side side) {
    if (!m.rig()->is_finite())
        throw DomainError("operation tables require a finite carrier");
    std::vector<OpTable> components;
    components.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<RigValue> row;
        row.reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j));
        components.push_back(op_from_row(RigMatrix::row(m.rig(), std::move(row)), side));
    }
    return MultiOp::of(m.rig()->size(), static_cast<std::uint32_t>(m.cols()),
                       std::move(components));
}

} // namespace clonelab
