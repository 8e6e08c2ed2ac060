#include "clonelab/json_io.hpp"

namespace clonelab {

namespace {

std::vector<std::uint32_t> flat_table_from_json(const Json& j, std::uint32_t size,
                                                const char* which) {
    if (!j.is_array() || j.size() != size)
        throw StructuralError(std::string(which) + " table must have one row per carrier element");
    std::vector<std::uint32_t> flat;
    flat.reserve(static_cast<std::size_t>(size) * size);
    for (const Json& row : j) {
        if (!row.is_array() || row.size() != size)
            throw StructuralError(std::string(which) + " table rows must have length " +
                                  std::to_string(size));
        for (const Json& cell : row) {
            if (!cell.is_number_unsigned() || cell.get<std::uint64_t>() >= size)
                throw StructuralError(std::string(which) +
                                      " table entries must be integers in [0, size)");
            flat.push_back(cell.get<std::uint32_t>());
        }
    }
    return flat;
}

Json flat_table_to_json(const std::vector<std::uint32_t>& flat, std::uint32_t size) {
    Json rows = Json::array();
    for (std::uint32_t i = 0; i < size; ++i) {
        Json row = Json::array();
        for (std::uint32_t j = 0; j < size; ++j)
            row.push_back(flat[i * size + j]);
        rows.push_back(std::move(row));
    }
    return rows;
}

RigValue value_from_json(const Json& cell, const Rig& rig) {
    if (cell.is_string())
        return rig.value_from_string(cell.get<std::string>());
    if (cell.is_number_integer()) {
        switch (rig.kind()) {
        case RigKind::finite: {
            if (!cell.is_number_unsigned() || cell.get<std::uint64_t>() >= rig.size())
                throw StructuralError("carrier index out of range in matrix entry");
            return cell.get<std::uint32_t>();
        }
        case RigKind::integers: return BigInt(cell.get<long>());
        case RigKind::d_adic: return Dadic(rig.dadic_base(), BigInt(cell.get<long>()));
        }
    }
    throw StructuralError("matrix entries must be integers or value strings");
}

Json value_to_json(const RigValue& v, const Rig& rig) {
    switch (rig.kind()) {
    case RigKind::finite: return std::get<std::uint32_t>(v);
    case RigKind::integers: {
        const BigInt& z = std::get<BigInt>(v);
        if (z.fits_slong_p())
            return z.get_si();
        return to_string(z);
    }
    case RigKind::d_adic: {
        const Dadic& d = std::get<Dadic>(v);
        if (d.is_integer() && d.numerator().fits_slong_p())
            return d.numerator().get_si();
        return d.str();
    }
    }
    throw Error("unreachable");
}

} // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw StructuralError(std::string("malformed JSON: ") + e.what());
    }
}

Json finite_rig_to_json(const FiniteRig& rig) {
    return Json{{"size", rig.size},
                {"add", flat_table_to_json(rig.add, rig.size)},
                {"mul", flat_table_to_json(rig.mul, rig.size)},
                {"zero", rig.zero},
                {"one", rig.one}};
}

FiniteRig finite_rig_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("add") || !j.contains("mul") ||
        !j.contains("zero") || !j.contains("one"))
        throw StructuralError("finite rig object needs size, add, mul, zero, one");
    if (!j["size"].is_number_unsigned() || j["size"].get<std::uint64_t>() == 0)
        throw StructuralError("rig size must be a positive integer");
    FiniteRig rig;
    rig.size = j["size"].get<std::uint32_t>();
    rig.add = flat_table_from_json(j["add"], rig.size, "add");
    rig.mul = flat_table_from_json(j["mul"], rig.size, "mul");
    if (!j["zero"].is_number_unsigned() || !j["one"].is_number_unsigned())
        throw StructuralError("zero/one must be carrier indices");
    rig.zero = j["zero"].get<std::uint32_t>();
    rig.one = j["one"].get<std::uint32_t>();
    if (rig.zero >= rig.size || rig.one >= rig.size)
        throw StructuralError("zero/one outside carrier range");
    return rig;
}

RigHandle rig_from_json(const Json& j) {
    if (j.is_string())
        return standard_rig(j.get<std::string>());
    if (j.is_object())
        return make_finite_rig(finite_rig_from_json(j));
    throw StructuralError("rig must be a name string or an inline table object");
}

Json rig_to_json(const RigHandle& rig) {
    if (!rig->is_finite())
        return rig->name();
    try {
        if (standard_rig(rig->name())->equals(*rig))
            return rig->name();
    } catch (const ParameterError&) {
        // not a standard name; fall through to inline tables
    }
    return finite_rig_to_json(rig->tables());
}

Json optable_to_json(const OpTable& op) {
    return Json{{"k", op.carrier}, {"arity", op.arity}, {"outputs", op.outputs}};
}

OpTable optable_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("arity") || !j.contains("outputs"))
        throw StructuralError("operation table object needs k, arity, outputs");
    if (!j["k"].is_number_unsigned() || !j["arity"].is_number_unsigned() ||
        !j["outputs"].is_array())
        throw StructuralError("malformed operation table object");
    OpTable op;
    op.carrier = j["k"].get<std::uint32_t>();
    op.arity = j["arity"].get<std::uint32_t>();
    const std::uint64_t expected = power_checked(op.carrier, op.arity);
    if (j["outputs"].size() != expected)
        throw StructuralError("outputs array must have length k^arity = " +
                              std::to_string(expected));
    op.outputs.reserve(expected);
    for (const Json& cell : j["outputs"]) {
        if (!cell.is_number_unsigned() || cell.get<std::uint64_t>() >= op.carrier)
            throw StructuralError("outputs entries must be carrier indices");
        op.outputs.push_back(cell.get<std::uint32_t>());
    }
    return op;
}

RigMatrix matrix_from_entries(const Json& entries, const RigHandle& rig) {
    if (!entries.is_array())
        throw StructuralError("matrix entries must be an array of rows");
    const std::size_t rows = entries.size();
    std::size_t cols = 0;
    std::vector<RigValue> flat;
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = entries[i];
        if (!row.is_array())
            throw StructuralError("matrix rows must be arrays");
        if (i == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw StructuralError("matrix rows have inconsistent lengths");
        for (const Json& cell : row)
            flat.push_back(value_from_json(cell, *rig));
    }
    return RigMatrix(rig, rows, cols, std::move(flat));
}

RigMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rig") || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw StructuralError("matrix object needs rig, rows, cols, entries");
    const RigHandle rig = rig_from_json(j["rig"]);
    RigMatrix m = matrix_from_entries(j["entries"], rig);
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() ||
        m.rows() != j["rows"].get<std::size_t>() ||
        (m.rows() > 0 && m.cols() != j["cols"].get<std::size_t>()))
        throw StructuralError("declared matrix shape does not match entries");
    if (m.rows() == 0)
        return RigMatrix(rig, 0, j["cols"].get<std::size_t>());
    return m;
}

Json entries_to_json(const RigMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(value_to_json(m.at(i, j), *m.rig()));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_to_json(const RigMatrix& m) {
    return Json{{"rig", rig_to_json(m.rig())},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", entries_to_json(m)}};
}

Json slice_to_json(const CloneSlice& slice) {
    Json ops = Json::array();
    for (const OpTable& op : slice.ops)
        ops.push_back(optable_to_json(op));
    return Json{{"carrier", slice.carrier}, {"arity", slice.arity}, {"ops", ops},
                {"count", slice.ops.size()}};
}

Json commutant_report(const GeneratorSet& gens, std::uint32_t arity,
                      const CommutantResult& result) {
    Json generators = Json::array();
    for (const OpTable& g : gens.generators)
        generators.push_back(optable_to_json(g));
    Json ops = Json::array();
    for (const OpTable& op : result.slice.ops)
        ops.push_back(optable_to_json(op));
    return Json{{"schema", 1},
                {"carrier", gens.carrier},
                {"arity", arity},
                {"generators", generators},
                {"ops", ops},
                {"count", result.slice.ops.size()},
                {"visited", result.visited}};
}

} // namespace clonelab
