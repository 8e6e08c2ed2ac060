#include "clonelab/clone.hpp"

#include <algorithm>
#include <set>

namespace clonelab {

GeneratorSet GeneratorSet::of(std::uint32_t carrier, std::vector<OpTable> generators) {
    for (const OpTable& g : generators)
        if (g.carrier != carrier)
            throw StructuralError("generator carrier mismatch");
    return GeneratorSet{carrier, std::move(generators)};
}

CloneSlice CloneSlice::of(std::uint32_t carrier, std::uint32_t arity, std::vector<OpTable> ops) {
    for (const OpTable& op : ops)
        if (op.carrier != carrier || op.arity != arity)
            throw StructuralError("slice member carrier/arity mismatch");
    std::sort(ops.begin(), ops.end(), optable_less);
    ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
    return CloneSlice{carrier, arity, std::move(ops)};
}

bool CloneSlice::contains(const OpTable& op) const {
    return std::binary_search(ops.begin(), ops.end(), op, optable_less);
}

namespace {

void require_same_carrier(std::uint32_t a, std::uint32_t b) {
    if (a != b)
        throw StructuralError("operations live on different carriers: " + std::to_string(a) +
                              " vs " + std::to_string(b));
}

/// Advances a little-endian odometer over `cells` digits base k; returns
/// false once the odometer wraps back to all zeros.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t k) {
    for (auto& d : digits) {
        if (++d < k)
            return true;
        d = 0;
    }
    return false;
}

/// Shared grid walk: invokes `on_violation(grid)` for each grid breaking
/// the interchange law; stops early when it returns true.
template <typename OnViolation>
void scan_commutation_grids(const OpTable& mu, const OpTable& nu, OnViolation on_violation) {
    require_same_carrier(mu.carrier, nu.carrier);
    const std::uint32_t k = mu.carrier;
    const std::uint32_t j = mu.arity;
    const std::uint32_t kk = nu.arity;

    std::vector<std::uint64_t> pw(std::max(j, kk) + 1, 1);
    for (std::size_t i = 1; i < pw.size(); ++i)
        pw[i] = pw[i - 1] * k;

    std::vector<std::uint32_t> grid(static_cast<std::size_t>(j) * kk, 0); // row-major j x kk
    std::vector<std::uint32_t> mu_of_cols(kk), nu_of_rows(j);
    do {
        for (std::uint32_t t = 0; t < kk; ++t) {
            std::uint64_t enc = 0;
            for (std::uint32_t v = 0; v < j; ++v)
                enc += pw[v] * grid[v * kk + t];
            mu_of_cols[t] = mu.outputs[enc];
        }
        std::uint64_t lhs_enc = 0;
        for (std::uint32_t t = 0; t < kk; ++t)
            lhs_enc += pw[t] * mu_of_cols[t];
        const std::uint32_t lhs = nu.outputs[lhs_enc];

        for (std::uint32_t v = 0; v < j; ++v) {
            std::uint64_t enc = 0;
            for (std::uint32_t t = 0; t < kk; ++t)
                enc += pw[t] * grid[v * kk + t];
            nu_of_rows[v] = nu.outputs[enc];
        }
        std::uint64_t rhs_enc = 0;
        for (std::uint32_t v = 0; v < j; ++v)
            rhs_enc += pw[v] * nu_of_rows[v];
        const std::uint32_t rhs = mu.outputs[rhs_enc];

        if (lhs != rhs && on_violation(grid))
            return;
    } while (advance(grid, k));
}

} // namespace

bool op_commutes(const OpTable& mu, const OpTable& nu) {
    bool ok = true;
    scan_commutation_grids(mu, nu, [&](const std::vector<std::uint32_t>&) {
        ok = false;
        return true;
    });
    return ok;
}

std::optional<std::vector<std::uint32_t>> op_commutes_witness(const OpTable& mu,
                                                              const OpTable& nu) {
    std::optional<std::vector<std::uint32_t>> witness;
    scan_commutation_grids(mu, nu, [&](const std::vector<std::uint32_t>& grid) {
        witness = grid;
        return true;
    });
    return witness;
}

bool multiop_commutes(const MultiOp& mu, const MultiOp& nu) {
    require_same_carrier(mu.carrier, nu.carrier);
    for (const OpTable& m : mu.components)
        for (const OpTable& n : nu.components)
            if (!op_commutes(m, n))
                return false;
    return true;
}

namespace {

std::vector<std::uint64_t> radix_powers(std::uint32_t k, std::uint32_t count) {
    std::vector<std::uint64_t> pw(count == 0 ? 1 : count, 1);
    for (std::size_t i = 1; i < pw.size(); ++i)
        pw[i] = pw[i - 1] * k;
    return pw;
}

/// One commutation grid against one generator, compiled down to what it
/// asks of a candidate table f: g applied to the f-values at `col_encs`
/// must equal the f-value at `y_enc`.
struct CompiledConstraint {
    const OpTable* g;
    std::vector<std::uint32_t> col_encs;
    std::uint32_t y_enc;
};

/// Grid enumeration during compilation is charged against the same node
/// budget as the search proper, so absurd arities fail loudly up front.
std::vector<std::vector<CompiledConstraint>> compile_constraints(const GeneratorSet& gens,
                                                                 std::uint32_t n,
                                                                 std::uint64_t table_len,
                                                                 std::uint64_t& visited,
                                                                 std::uint64_t budget) {
    const std::uint32_t k = gens.carrier;
    std::vector<std::vector<CompiledConstraint>> buckets(table_len);
    const auto pw = radix_powers(k, n + 1);

    for (const OpTable& g : gens.generators) {
        const std::uint32_t m = g.arity;
        std::vector<std::uint32_t> grid(static_cast<std::size_t>(n) * m, 0); // n rows x m cols
        std::vector<std::uint32_t> row(m);
        do {
            if (++visited > budget)
                throw ResourceError("commutant constraint compilation exceeded node budget of " +
                                        std::to_string(budget),
                                    visited, 0);
            CompiledConstraint c;
            c.g = &g;
            c.col_encs.resize(m);
            std::uint64_t max_pos = 0;
            for (std::uint32_t t = 0; t < m; ++t) {
                std::uint64_t enc = 0;
                for (std::uint32_t v = 0; v < n; ++v)
                    enc += pw[v] * grid[v * m + t];
                c.col_encs[t] = static_cast<std::uint32_t>(enc);
                max_pos = std::max(max_pos, enc);
            }
            std::uint64_t y_enc = 0;
            for (std::uint32_t v = 0; v < n; ++v) {
                for (std::uint32_t t = 0; t < m; ++t)
                    row[t] = grid[v * m + t];
                y_enc += pw[v] * g.eval(row);
            }
            c.y_enc = static_cast<std::uint32_t>(y_enc);
            max_pos = std::max(max_pos, y_enc);
            buckets[max_pos].push_back(std::move(c));
        } while (advance(grid, k));
    }
    return buckets;
}

bool constraint_satisfied(const CompiledConstraint& c, const std::vector<std::uint32_t>& f,
                          const std::vector<std::uint64_t>& pw) {
    std::uint64_t enc = 0;
    for (std::size_t t = 0; t < c.col_encs.size(); ++t)
        enc += pw[t] * f[c.col_encs[t]];
    return c.g->outputs[enc] == f[c.y_enc];
}

} // namespace

CommutantResult commutant(const GeneratorSet& gens, std::uint32_t arity, SearchLimits limits) {
    const std::uint32_t k = gens.carrier;
    if (k == 0)
        throw StructuralError("empty carrier");
    const std::uint64_t table_len = power_checked(k, arity);
    // a complete search visits at least one node per output position
    if (table_len > limits.node_budget)
        throw ResourceError("candidate tables have " + std::to_string(table_len) +
                                " outputs, more than the node budget of " +
                                std::to_string(limits.node_budget),
                            0, 0);
    std::uint64_t visited = 0;
    const auto buckets =
        compile_constraints(gens, arity, table_len, visited, limits.node_budget);

    std::uint32_t max_gen_arity = 0;
    for (const OpTable& g : gens.generators)
        max_gen_arity = std::max(max_gen_arity, g.arity);
    const auto pw = radix_powers(k, max_gen_arity + 1);

    std::vector<OpTable> found;
    std::vector<std::uint32_t> f(table_len, 0);

    // Depth-first over output positions in tuple-encoding order; values
    // ascend, so results appear in canonical (lexicographic) order.
    const auto search = [&](auto&& self, std::uint64_t pos) -> void {
        if (pos == table_len) {
            found.push_back(OpTable{k, arity, f});
            return;
        }
        for (std::uint32_t value = 0; value < k; ++value) {
            if (++visited > limits.node_budget)
                throw ResourceError("commutant search exceeded node budget of " +
                                        std::to_string(limits.node_budget) + " (frontier depth " +
                                        std::to_string(pos) + " of " + std::to_string(table_len) +
                                        ")",
                                    visited, pos);
            f[pos] = value;
            bool consistent = true;
            for (const CompiledConstraint& c : buckets[pos]) {
                if (!constraint_satisfied(c, f, pw)) {
                    consistent = false;
                    break;
                }
            }
            if (consistent)
                self(self, pos + 1);
        }
    };
    search(search, 0);

    return CommutantResult{CloneSlice::of(k, arity, std::move(found)), visited};
}

CloneSlice commutant_by_enumeration(const GeneratorSet& gens, std::uint32_t arity) {
    const std::uint32_t k = gens.carrier;
    const std::uint64_t table_len = power_checked(k, arity);
    std::vector<OpTable> found;
    OpTable f{k, arity, std::vector<std::uint32_t>(table_len, 0)};
    // Most significant digit first so the listing comes out lexicographic.
    while (true) {
        bool ok = true;
        for (const OpTable& g : gens.generators) {
            if (!op_commutes(f, g)) {
                ok = false;
                break;
            }
        }
        if (ok)
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

CloneSlice generate_clone(const GeneratorSet& gens, std::uint32_t arity) {
    const std::uint32_t k = gens.carrier;
    if (k == 0)
        throw StructuralError("empty carrier");

    std::set<std::vector<std::uint32_t>> seen;
    std::vector<OpTable> slice;
    const auto insert = [&](OpTable op) {
        if (seen.insert(op.outputs).second) {
            slice.push_back(std::move(op));
            return true;
        }
        return false;
    };

    std::vector<OpTable> projections_n;
    projections_n.reserve(arity);
    for (std::uint32_t i = 0; i < arity; ++i)
        projections_n.push_back(projection(arity, i, k));
    for (const OpTable& p : projections_n)
        insert(p);

    // Generator minors: each generator with its variables drawn from the
    // n target variables in every possible way.
    for (const OpTable& g : gens.generators) {
        if (g.arity > 0 && arity == 0)
            continue; // no variables to draw from
        std::vector<std::uint32_t> sigma(g.arity, 0);
        do {
            std::vector<OpTable> inners;
            inners.reserve(g.arity);
            for (std::uint32_t t = 0; t < g.arity; ++t)
                inners.push_back(projections_n[sigma[t]]);
            insert(compose(g, inners, arity));
        } while (advance(sigma, std::max<std::uint32_t>(arity, 1)));
    }

    // Saturate under outer composition with a generator until no pass
    // discovers a new table.
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t snapshot = slice.size();
        for (const OpTable& g : gens.generators) {
            if (g.arity == 0)
                continue; // nullary minors already inserted
            std::vector<std::size_t> pick(g.arity, 0);
            if (snapshot == 0)
                continue;
            while (true) {
                std::vector<OpTable> inners;
                inners.reserve(g.arity);
                for (std::size_t t = 0; t < g.arity; ++t)
                    inners.push_back(slice[pick[t]]);
                if (insert(compose(g, inners, arity)))
                    changed = true;
                std::size_t t = 0;
                for (; t < pick.size(); ++t) {
                    if (++pick[t] < snapshot)
                        break;
                    pick[t] = 0;
                }
                if (t == pick.size())
                    break;
            }
        }
    }

    return CloneSlice::of(k, arity, std::move(slice));
}

bool clones_equal_at_arity(const CloneSlice& a, const CloneSlice& b) {
    if (a.carrier != b.carrier || a.arity != b.arity)
        throw StructuralError("slice comparison across carriers or arities");
    return a.ops == b.ops;
}

} // namespace clonelab
