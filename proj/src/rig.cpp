#include "clonelab/rig.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace clonelab {

namespace {

void require_consistent_tables(const FiniteRig& r) {
    const std::size_t cells = static_cast<std::size_t>(r.size) * r.size;
    if (r.size == 0)
        throw StructuralError("finite rig carrier must be nonempty");
    if (r.add.size() != cells || r.mul.size() != cells)
        throw StructuralError("rig table dimensions do not match carrier size " +
                              std::to_string(r.size));
    for (std::uint32_t e : r.add)
        if (e >= r.size)
            throw StructuralError("add table entry out of carrier range");
    for (std::uint32_t e : r.mul)
        if (e >= r.size)
            throw StructuralError("mul table entry out of carrier range");
    if (r.zero >= r.size || r.one >= r.size)
        throw StructuralError("designated zero/one outside carrier range");
}

} // namespace

ValidationReport validate_rig(const FiniteRig& r) {
    require_consistent_tables(r);
    ValidationReport report;
    const auto fail = [&](const char* axiom, std::initializer_list<std::uint32_t> witness) {
        report.ok = false;
        report.violations.push_back({axiom, std::vector<std::uint32_t>(witness)});
    };

    const std::uint32_t k = r.size;

    for (std::uint32_t a = 0; a < k; ++a) {
        if (r.add_at(r.zero, a) != a || r.add_at(a, r.zero) != a) {
            fail("zero is not an additive identity", {a});
            break;
        }
    }
    for (std::uint32_t a = 0; a < k; ++a) {
        if (r.mul_at(r.one, a) != a || r.mul_at(a, r.one) != a) {
            fail("one is not a multiplicative identity", {a});
            break;
        }
    }
    for (std::uint32_t a = 0; a < k && report.violations.size() < 32; ++a) {
        for (std::uint32_t b = 0; b < k; ++b) {
            if (r.add_at(a, b) != r.add_at(b, a)) {
                fail("addition is not commutative", {a, b});
                a = k;
                break;
            }
        }
    }

    bool add_assoc_ok = true, mul_assoc_ok = true;
    bool ldist_ok = true, rdist_ok = true;
    for (std::uint32_t a = 0; a < k; ++a) {
        for (std::uint32_t b = 0; b < k; ++b) {
            for (std::uint32_t c = 0; c < k; ++c) {
                if (add_assoc_ok && r.add_at(r.add_at(a, b), c) != r.add_at(a, r.add_at(b, c))) {
                    fail("addition is not associative", {a, b, c});
                    add_assoc_ok = false;
                }
                if (mul_assoc_ok && r.mul_at(r.mul_at(a, b), c) != r.mul_at(a, r.mul_at(b, c))) {
                    fail("multiplication is not associative", {a, b, c});
                    mul_assoc_ok = false;
                }
                if (ldist_ok && r.mul_at(a, r.add_at(b, c)) != r.add_at(r.mul_at(a, b), r.mul_at(a, c))) {
                    fail("multiplication does not left-distribute over addition", {a, b, c});
                    ldist_ok = false;
                }
                if (rdist_ok && r.mul_at(r.add_at(b, c), a) != r.add_at(r.mul_at(b, a), r.mul_at(c, a))) {
                    fail("multiplication does not right-distribute over addition", {a, b, c});
                    rdist_ok = false;
                }
            }
        }
    }

    for (std::uint32_t a = 0; a < k; ++a) {
        if (r.mul_at(r.zero, a) != r.zero || r.mul_at(a, r.zero) != r.zero) {
            fail("zero does not annihilate", {a});
            break;
        }
    }

    return report;
}

std::uint32_t Rig::size() const {
    if (kind_ != RigKind::finite)
        throw DomainError("carrier of " + name_ + " is infinite");
    return tables_.size;
}

const FiniteRig& Rig::tables() const {
    if (kind_ != RigKind::finite)
        throw DomainError("rig " + name_ + " has no finite tables");
    return tables_;
}

long Rig::dadic_base() const {
    if (kind_ != RigKind::d_adic)
        throw DomainError("rig " + name_ + " is not d-adic");
    return dadic_base_;
}

std::uint32_t Rig::idx(const RigValue& v) const {
    const auto* p = std::get_if<std::uint32_t>(&v);
    if (!p || *p >= tables_.size)
        throw StructuralError("value does not belong to finite rig " + name_);
    return *p;
}

const BigInt& Rig::zz(const RigValue& v) const {
    const auto* p = std::get_if<BigInt>(&v);
    if (!p)
        throw StructuralError("value does not belong to rig " + name_);
    return *p;
}

const Dadic& Rig::dd(const RigValue& v) const {
    const auto* p = std::get_if<Dadic>(&v);
    if (!p || p->base() != dadic_base_)
        throw StructuralError("value does not belong to rig " + name_);
    return *p;
}

RigValue Rig::zero() const {
    switch (kind_) {
    case RigKind::finite: return tables_.zero;
    case RigKind::integers: return BigInt(0);
    case RigKind::d_adic: return Dadic(dadic_base_, 0);
    }
    throw Error("unreachable");
}

RigValue Rig::one() const {
    switch (kind_) {
    case RigKind::finite: return tables_.one;
    case RigKind::integers: return BigInt(1);
    case RigKind::d_adic: return Dadic(dadic_base_, 1);
    }
    throw Error("unreachable");
}

RigValue Rig::add(const RigValue& a, const RigValue& b) const {
    switch (kind_) {
    case RigKind::finite: return tables_.add_at(idx(a), idx(b));
    case RigKind::integers: return zz(a) + zz(b);
    case RigKind::d_adic: return dd(a) + dd(b);
    }
    throw Error("unreachable");
}

RigValue Rig::mul(const RigValue& a, const RigValue& b) const {
    switch (kind_) {
    case RigKind::finite: return tables_.mul_at(idx(a), idx(b));
    case RigKind::integers: return zz(a) * zz(b);
    case RigKind::d_adic: return dd(a) * dd(b);
    }
    throw Error("unreachable");
}

RigValue Rig::neg(const RigValue& a) const {
    if (!is_ring_)
        throw DomainError("rig " + name_ + " has no additive inverses");
    switch (kind_) {
    case RigKind::finite: {
        const std::uint32_t x = idx(a);
        for (std::uint32_t y = 0; y < tables_.size; ++y)
            if (tables_.add_at(x, y) == tables_.zero)
                return y;
        throw Error("cached is_ring flag inconsistent with tables");
    }
    case RigKind::integers: return BigInt(-zz(a));
    case RigKind::d_adic: return -dd(a);
    }
    throw Error("unreachable");
}

bool Rig::eq(const RigValue& a, const RigValue& b) const {
    switch (kind_) {
    case RigKind::finite: return idx(a) == idx(b);
    case RigKind::integers: return zz(a) == zz(b);
    case RigKind::d_adic: return dd(a) == dd(b);
    }
    throw Error("unreachable");
}

bool Rig::equals(const Rig& other) const {
    if (this == &other)
        return true;
    if (kind_ != other.kind_)
        return false;
    switch (kind_) {
    case RigKind::finite: return tables_ == other.tables_;
    case RigKind::integers: return true;
    case RigKind::d_adic: return dadic_base_ == other.dadic_base_;
    }
    return false;
}

std::string Rig::value_str(const RigValue& v) const {
    switch (kind_) {
    case RigKind::finite: return std::to_string(idx(v));
    case RigKind::integers: return to_string(zz(v));
    case RigKind::d_adic: return dd(v).str();
    }
    throw Error("unreachable");
}

RigValue Rig::value_from_string(const std::string& text) const {
    switch (kind_) {
    case RigKind::finite: {
        for (char c : text)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw StructuralError("finite rig values are carrier indices, got \"" + text + "\"");
        unsigned long v = 0;
        try {
            v = std::stoul(text);
        } catch (const std::exception&) {
            throw StructuralError("carrier index " + text + " out of range for " + name_);
        }
        if (v >= tables_.size)
            throw StructuralError("carrier index " + text + " out of range for " + name_);
        return static_cast<std::uint32_t>(v);
    }
    case RigKind::integers: {
        try {
            return BigInt(text);
        } catch (const std::invalid_argument&) {
            throw StructuralError("malformed integer literal: \"" + text + "\"");
        }
    }
    case RigKind::d_adic: return Dadic::parse(dadic_base_, text);
    }
    throw Error("unreachable");
}

namespace {

bool tables_commutative(const FiniteRig& t) {
    for (std::uint32_t a = 0; a < t.size; ++a)
        for (std::uint32_t b = 0; b < a; ++b)
            if (t.mul_at(a, b) != t.mul_at(b, a))
                return false;
    return true;
}

bool tables_ring(const FiniteRig& t) {
    for (std::uint32_t a = 0; a < t.size; ++a) {
        bool has_inverse = false;
        for (std::uint32_t b = 0; b < t.size; ++b)
            if (t.add_at(a, b) == t.zero) {
                has_inverse = true;
                break;
            }
        if (!has_inverse)
            return false;
    }
    return true;
}

} // namespace

RigHandle make_finite_rig(FiniteRig tables, std::string name) {
    const ValidationReport report = validate_rig(tables);
    if (!report.ok) {
        std::string what = "rig axioms violated:";
        for (const auto& v : report.violations)
            what += " [" + v.axiom + "]";
        throw DomainError(what);
    }
    auto rig = std::shared_ptr<Rig>(new Rig());
    rig->kind_ = RigKind::finite;
    rig->is_commutative_ = tables_commutative(tables);
    rig->is_ring_ = tables_ring(tables);
    rig->name_ = name.empty() ? ("finite" + std::to_string(tables.size)) : std::move(name);
    rig->tables_ = std::move(tables);
    return rig;
}

RigHandle rig_bool2() {
    static const RigHandle instance = [] {
        FiniteRig t;
        t.size = 2;
        t.add = {0, 1, 1, 1}; // join
        t.mul = {0, 0, 0, 1}; // meet
        t.zero = 0;
        t.one = 1;
        return make_finite_rig(std::move(t), "bool2");
    }();
    return instance;
}

RigHandle rig_zmod(std::uint32_t m) {
    if (m < 1)
        throw ParameterError("zmod modulus must be at least 1");
    FiniteRig t;
    t.size = m;
    t.add.resize(static_cast<std::size_t>(m) * m);
    t.mul.resize(static_cast<std::size_t>(m) * m);
    for (std::uint32_t a = 0; a < m; ++a) {
        for (std::uint32_t b = 0; b < m; ++b) {
            t.add[a * m + b] = (a + b) % m;
            t.mul[a * m + b] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % m);
        }
    }
    t.zero = 0;
    t.one = m == 1 ? 0 : 1;
    return make_finite_rig(std::move(t), "zmod(" + std::to_string(m) + ")");
}

RigHandle rig_integers() {
    static const RigHandle instance = [] {
        auto rig = std::shared_ptr<Rig>(new Rig());
        rig->kind_ = RigKind::integers;
        rig->is_ring_ = true;
        rig->is_commutative_ = true;
        rig->name_ = "int";
        return RigHandle(rig);
    }();
    return instance;
}

RigHandle rig_dadic(long d) {
    if (d < 2)
        throw ParameterError("d-adic base must be at least 2");
    auto rig = std::shared_ptr<Rig>(new Rig());
    rig->kind_ = RigKind::d_adic;
    rig->dadic_base_ = d;
    rig->is_ring_ = true;
    rig->is_commutative_ = true;
    rig->name_ = "dadic(" + std::to_string(d) + ")";
    return rig;
}

RigHandle standard_rig(const std::string& name) {
    const auto numeric_suffix = [](const std::string& s, const std::string& prefix) -> long {
        // accepts prefixN and prefix(N)
        if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0)
            return -1;
        std::string rest = s.substr(prefix.size());
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
            rest = rest.substr(1, rest.size() - 2);
        if (rest.empty() ||
            !std::all_of(rest.begin(), rest.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
            return -1;
        try {
            return std::stol(rest);
        } catch (const std::out_of_range&) {
            return -1;
        }
    };

    if (name == "bool2")
        return rig_bool2();
    if (name == "int" || name == "integers")
        return rig_integers();
    if (long m = numeric_suffix(name, "zmod"); m >= 0)
        return rig_zmod(static_cast<std::uint32_t>(m));
    if (long d = numeric_suffix(name, "dadic"); d >= 0)
        return rig_dadic(d);
    if (long d = numeric_suffix(name, "d_adic"); d >= 0)
        return rig_dadic(d);
    throw ParameterError("unknown rig name: \"" + name + "\"");
}

RigHandle opposite_rig(const RigHandle& rig) {
    if (!rig->is_finite())
        return rig; // exact backends are commutative
    const FiniteRig& t = rig->tables();
    FiniteRig op = t;
    for (std::uint32_t a = 0; a < t.size; ++a)
        for (std::uint32_t b = 0; b < t.size; ++b)
            op.mul[a * t.size + b] = t.mul_at(b, a);
    std::string name = rig->name();
    if (name.size() >= 3 && name.compare(name.size() - 3, 3, "^op") == 0)
        name.resize(name.size() - 3);
    else
        name += "^op";
    return make_finite_rig(std::move(op), std::move(name));
}

RigValue embed_integer(const Rig& rig, long n) {
    if (n < 0 && !rig.is_ring())
        throw DomainError("cannot embed negative integer into " + rig.name());
    switch (rig.kind()) {
    case RigKind::integers: return BigInt(n);
    case RigKind::d_adic: return Dadic(rig.dadic_base(), BigInt(n));
    case RigKind::finite: {
        RigValue acc = rig.zero();
        const long reps = n < 0 ? -n : n;
        for (long i = 0; i < reps; ++i)
            acc = rig.add(acc, rig.one());
        return n < 0 ? rig.neg(acc) : acc;
    }
    }
    throw Error("unreachable");
}

} // namespace clonelab
