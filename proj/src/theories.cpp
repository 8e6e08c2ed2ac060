#include "clonelab/theories.hpp"

#include <algorithm>
#include <functional>

namespace clonelab {

namespace {

bool is_bool2(const Rig& rig) { return rig.is_finite() && rig.equals(*rig_bool2()); }

void require_finite(const TheoryName& t) {
    if (!t.rig || !t.rig->is_finite())
        throw DomainError("theory slices require a finite carrier");
}

/// All rows w in R^{1 x n}, visited in little-endian index order.
template <typename Fn>
void for_each_row(const RigHandle& rig, std::uint32_t n, Fn fn) {
    const std::uint32_t k = rig->size();
    std::vector<std::uint32_t> digits(n, 0);
    while (true) {
        std::vector<RigValue> entries(digits.begin(), digits.end());
        fn(RigMatrix::row(rig, std::move(entries)));
        std::uint32_t pos = 0;
        for (; pos < n; ++pos) {
            if (++digits[pos] < k)
                break;
            digits[pos] = 0;
        }
        if (pos == n)
            break;
    }
}

CloneSlice all_tables_filtered(std::uint32_t k, std::uint32_t arity, std::uint64_t table_budget,
                               const std::function<bool(const OpTable&)>& keep) {
    const std::uint64_t table_len = power_checked(k, arity);
    std::uint64_t count = 1;
    for (std::uint64_t i = 0; i < table_len && count <= table_budget; ++i)
        count = count > table_budget / k ? table_budget + 1 : count * k;
    if (count > table_budget)
        throw ResourceError("slice enumeration over " + std::to_string(k) + "^" +
                                std::to_string(table_len) + " tables exceeds budget",
                            0, 0);

    std::vector<OpTable> found;
    OpTable f{k, arity, std::vector<std::uint32_t>(table_len, 0)};
    while (true) {
        if (keep(f))
            found.push_back(f);
        std::size_t pos = f.outputs.size();
        while (pos > 0) {
            if (++f.outputs[pos - 1] < k)
                break;
            f.outputs[pos - 1] = 0;
            --pos;
        }
        if (pos == 0)
            break;
    }
    return CloneSlice::of(k, arity, std::move(found));
}

/// f preserves binary join on the two-element carrier:
/// f(x v y) = f(x) v f(y) for all argument tuples x, y.
bool preserves_binary_join(const OpTable& f) {
    const std::uint32_t n = f.arity;
    const std::uint64_t points = power_checked(2, n);
    std::vector<std::uint32_t> x(n), y(n), z(n);
    for (std::uint64_t ex = 0; ex < points; ++ex) {
        decode_tuple(ex, 2, x);
        for (std::uint64_t ey = 0; ey < points; ++ey) {
            decode_tuple(ey, 2, y);
            for (std::uint32_t i = 0; i < n; ++i)
                z[i] = x[i] | y[i];
            if (f.eval(z) != (f.outputs[ex] | f.outputs[ey]))
                return false;
        }
    }
    return true;
}

} // namespace

TheoryName TheoryName::of(TheoryTag tag, RigHandle rig) {
    if (!rig || !rig->is_finite())
        throw DomainError("named theories require a finite carrier rig");
    if ((tag == TheoryTag::uslat || tag == TheoryTag::slat_with_top) && !is_bool2(*rig))
        throw DomainError("semilattice theories are defined over bool2 only");
    return TheoryName{tag, std::move(rig)};
}

TheoryName parse_theory(const std::string& text) {
    std::string head = text;
    std::string rig_name = "bool2";
    if (const auto at = text.find('@'); at != std::string::npos) {
        head = text.substr(0, at);
        rig_name = text.substr(at + 1);
    }
    const RigHandle rig = standard_rig(rig_name);
    if (head == "mat-left")
        return TheoryName::of(TheoryTag::mat_left, rig);
    if (head == "mat-right")
        return TheoryName::of(TheoryTag::mat_right, rig);
    if (head == "aff")
        return TheoryName::of(TheoryTag::mat_affine, rig);
    if (head == "pointed")
        return TheoryName::of(TheoryTag::pointed_right_module, rig);
    if (head == "uslat")
        return TheoryName::of(TheoryTag::uslat, rig);
    if (head == "slat-top")
        return TheoryName::of(TheoryTag::slat_with_top, rig);
    if (head == "fincard")
        return TheoryName::of(TheoryTag::fincard_op, rig);
    if (head == "full")
        return TheoryName::of(TheoryTag::full_set_theory, rig);
    throw ParameterError("unknown theory name: \"" + text + "\"");
}

std::string theory_to_string(const TheoryName& t) {
    std::string head;
    switch (t.tag) {
    case TheoryTag::mat_left: head = "mat-left"; break;
    case TheoryTag::mat_right: head = "mat-right"; break;
    case TheoryTag::mat_affine: head = "aff"; break;
    case TheoryTag::pointed_right_module: head = "pointed"; break;
    case TheoryTag::uslat: head = "uslat"; break;
    case TheoryTag::slat_with_top: head = "slat-top"; break;
    case TheoryTag::fincard_op: head = "fincard"; break;
    case TheoryTag::full_set_theory: head = "full"; break;
    }
    return head + "@" + t.rig->name();
}

OpTable bool2_join() {
    return OpTable{2, 2, {0, 1, 1, 1}};
}

OpTable bool2_const(std::uint32_t value, std::uint32_t arity) {
    return constant_op(2, value, arity);
}

OpTable malcev_op(const RigHandle& ring) {
    if (!ring->is_finite())
        throw DomainError("operation tables require a finite carrier");
    if (!ring->is_ring())
        throw DomainError("x - y + z needs additive inverses; " + ring->name() + " is not a ring");
    const std::uint32_t k = ring->size();
    OpTable op{k, 3, {}};
    op.outputs.resize(power_checked(k, 3));
    std::vector<std::uint32_t> t(3);
    for (std::uint64_t e = 0; e < op.outputs.size(); ++e) {
        decode_tuple(e, k, t);
        const RigValue value =
            ring->add(ring->add(RigValue(t[0]), ring->neg(RigValue(t[1]))), RigValue(t[2]));
        op.outputs[e] = std::get<std::uint32_t>(value);
    }
    return op;
}

namespace {

/// True when repeated sums of one reach every carrier element; exactly
/// then integer coefficients exhaust the ring and x - y + z alone
/// generates every affine row.
bool prime_subring_is_everything(const Rig& ring) {
    const std::uint32_t k = ring.size();
    std::vector<bool> reached(k, false);
    RigValue acc = ring.zero();
    std::uint32_t count = 0;
    while (!reached[std::get<std::uint32_t>(acc)]) {
        reached[std::get<std::uint32_t>(acc)] = true;
        ++count;
        acc = ring.add(acc, ring.one());
    }
    return count == k;
}

/// The binary affine operation (x, y) -> (1 - a) x + a y.
OpTable translation_op(const RigHandle& ring, std::uint32_t a) {
    const std::uint32_t k = ring->size();
    const RigValue one_minus_a = ring->add(ring->one(), ring->neg(RigValue(a)));
    OpTable op{k, 2, {}};
    op.outputs.resize(static_cast<std::size_t>(k) * k);
    std::vector<std::uint32_t> t(2);
    for (std::uint64_t e = 0; e < op.outputs.size(); ++e) {
        decode_tuple(e, k, t);
        const RigValue value = ring->add(ring->mul(one_minus_a, RigValue(t[0])),
                                         ring->mul(RigValue(a), RigValue(t[1])));
        op.outputs[e] = std::get<std::uint32_t>(value);
    }
    return op;
}

} // namespace

CloneSlice theory_slice(const TheoryName& t, std::uint32_t arity, std::uint64_t table_budget) {
    require_finite(t);
    const RigHandle& rig = t.rig;
    const std::uint32_t k = rig->size();

    const auto guard_rows = [&](std::uint32_t vector_len) {
        // vector enumeration touches k^len rows of k^arity cells each
        const std::uint64_t cells =
            power_checked(k, vector_len) * power_checked(k, arity);
        if (cells > table_budget)
            throw ResourceError("slice enumeration over " + std::to_string(cells) +
                                    " table cells exceeds budget",
                                0, 0);
    };

    switch (t.tag) {
    case TheoryTag::fincard_op: {
        std::vector<OpTable> ops;
        for (std::uint32_t i = 0; i < arity; ++i)
            ops.push_back(projection(arity, i, k));
        return CloneSlice::of(k, arity, std::move(ops));
    }
    case TheoryTag::mat_left:
    case TheoryTag::mat_right: {
        guard_rows(arity);
        const Side side = t.tag == TheoryTag::mat_left ? Side::left : Side::right;
        std::vector<OpTable> ops;
        for_each_row(rig, arity, [&](const RigMatrix& w) { ops.push_back(op_from_row(w, side)); });
        return CloneSlice::of(k, arity, std::move(ops));
    }
    case TheoryTag::mat_affine: {
        guard_rows(arity);
        std::vector<OpTable> ops;
        for_each_row(rig, arity, [&](const RigMatrix& w) {
            if (is_affine_matrix(w))
                ops.push_back(op_from_row(w, Side::left));
        });
        return CloneSlice::of(k, arity, std::move(ops));
    }
    case TheoryTag::pointed_right_module: {
        guard_rows(arity + 1);
        std::vector<OpTable> ops;
        for_each_row(rig, arity + 1, [&](const RigMatrix& w) { ops.push_back(op_pointed(w)); });
        return CloneSlice::of(k, arity, std::move(ops));
    }
    case TheoryTag::uslat:
        return generate_clone(GeneratorSet::of(2, {bool2_join()}), arity);
    case TheoryTag::slat_with_top:
        return all_tables_filtered(2, arity, table_budget, preserves_binary_join);
    case TheoryTag::full_set_theory:
        return all_tables_filtered(k, arity, table_budget, [](const OpTable&) { return true; });
    }
    throw Error("unreachable");
}

GeneratorSet theory_generators(const TheoryName& t) {
    require_finite(t);
    const RigHandle& rig = t.rig;
    const std::uint32_t k = rig->size();

    const auto scalings = [&](Side side) {
        std::vector<OpTable> gens;
        OpTable addition{k, 2, {}};
        addition.outputs.resize(static_cast<std::size_t>(k) * k);
        std::vector<std::uint32_t> pair(2);
        for (std::uint64_t e = 0; e < addition.outputs.size(); ++e) {
            decode_tuple(e, k, pair);
            addition.outputs[e] =
                std::get<std::uint32_t>(rig->add(RigValue(pair[0]), RigValue(pair[1])));
        }
        gens.push_back(std::move(addition));
        gens.push_back(constant_op(k, std::get<std::uint32_t>(rig->zero())));
        for (std::uint32_t a = 0; a < k; ++a)
            gens.push_back(op_from_row(RigMatrix::row(rig, {RigValue(a)}), side));
        return gens;
    };

    switch (t.tag) {
    case TheoryTag::fincard_op:
        return GeneratorSet::of(k, {});
    case TheoryTag::mat_left:
        return GeneratorSet::of(k, scalings(Side::left));
    case TheoryTag::mat_right:
        return GeneratorSet::of(k, scalings(Side::right));
    case TheoryTag::mat_affine:
        if (is_bool2(*rig))
            return GeneratorSet::of(2, {bool2_join()});
        if (rig->is_ring()) {
            // x - y + z moves between integer-affine combinations, which
            // reach every row exactly when integer coefficients exhaust
            // the carrier; otherwise the binary translations
            // (1 - a) x + a y supply the missing coefficients.
            std::vector<OpTable> gens{malcev_op(rig)};
            if (!prime_subring_is_everything(*rig))
                for (std::uint32_t a = 0; a < k; ++a)
                    gens.push_back(translation_op(rig, a));
            return GeneratorSet::of(k, std::move(gens));
        }
        throw DomainError("no known finite presentation of the affine theory over " +
                          rig->name());
    case TheoryTag::pointed_right_module: {
        auto gens = scalings(Side::right);
        gens.push_back(constant_op(k, std::get<std::uint32_t>(rig->one())));
        return GeneratorSet::of(k, std::move(gens));
    }
    case TheoryTag::uslat:
        return GeneratorSet::of(2, {bool2_join()});
    case TheoryTag::slat_with_top:
        return GeneratorSet::of(2, {bool2_join(), bool2_const(0), bool2_const(1)});
    case TheoryTag::full_set_theory:
        throw DomainError("no finite presentation of the full finitary theory is provided");
    }
    throw Error("unreachable");
}

std::uint64_t expected_count(const TheoryName& t, std::uint32_t arity) {
    require_finite(t);
    const std::uint32_t k = t.rig->size();
    switch (t.tag) {
    case TheoryTag::fincard_op:
        return arity;
    case TheoryTag::mat_left:
    case TheoryTag::mat_right:
        return power_checked(k, arity);
    case TheoryTag::mat_affine: {
        std::uint64_t affine_rows = 0;
        for_each_row(t.rig, arity, [&](const RigMatrix& w) {
            if (is_affine_matrix(w))
                ++affine_rows;
        });
        return affine_rows;
    }
    case TheoryTag::pointed_right_module:
        if (t.rig->is_ring())
            return power_checked(k, arity + 1);
        return theory_slice(t, arity).ops.size();
    case TheoryTag::uslat:
        return power_checked(2, arity) - 1;
    case TheoryTag::slat_with_top:
        return power_checked(2, arity) + 1;
    case TheoryTag::full_set_theory: {
        const std::uint64_t points = power_checked(k, arity);
        if (points > 0xffffffffull)
            throw ResourceError("full theory count overflows", 0, 0);
        return power_checked(k, static_cast<std::uint32_t>(points));
    }
    }
    throw Error("unreachable");
}

} // namespace clonelab
