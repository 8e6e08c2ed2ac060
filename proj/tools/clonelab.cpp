#include "clonelab/checks.hpp"
#include "clonelab/json_io.hpp"
#include "clonelab/ordered.hpp"
#include "clonelab/theories.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace clonelab;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw StructuralError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SearchLimits limits_from(std::uint64_t budget_flag) {
    SearchLimits limits;
    if (budget_flag > 0) {
        limits.node_budget = budget_flag;
    } else if (const char* env = std::getenv("CLONELAB_BUDGET")) {
        try {
            limits.node_budget = std::stoull(env);
        } catch (const std::exception&) {
            throw ParameterError("CLONELAB_BUDGET must be a positive integer");
        }
    }
    return limits;
}

/// Resolves --gens: a named theory (resolved against --rig when it names
/// no carrier of its own), an inline JSON array of operation tables, or
/// @path to a JSON file holding one.
GeneratorSet resolve_generators(const std::string& source, const std::string& rig_name) {
    std::string text = source;
    if (!text.empty() && text.front() == '@')
        text = slurp(text.substr(1));
    if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
        const Json j = parse_json(text);
        const Json& array = j.is_object() && j.contains("generators") ? j["generators"] : j;
        if (!array.is_array())
            throw StructuralError("generator JSON must be an array of operation tables");
        std::vector<OpTable> gens;
        for (const Json& item : array)
            gens.push_back(optable_from_json(item));
        if (gens.empty())
            throw StructuralError("generator JSON names no operations; "
                                  "use the fincard theory for the empty set");
        const std::uint32_t carrier = gens.front().carrier;
        return GeneratorSet::of(carrier, std::move(gens));
    }
    const std::string qualified =
        text.find('@') != std::string::npos || rig_name.empty() ? text : text + "@" + rig_name;
    return theory_generators(parse_theory(qualified));
}

void render_table(const Json& value, std::ostream& out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (value.is_object()) {
        for (const auto& [key, item] : value.items()) {
            if (item.is_object() || (item.is_array() && !item.empty() && item[0].is_structured())) {
                out << pad << key << ":\n";
                render_table(item, out, indent + 1);
            } else {
                out << pad << key << ": " << item.dump() << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const Json& item : value) {
            if (item.is_structured()) {
                render_table(item, out, indent + 1);
                out << "\n";
            } else {
                out << pad << item.dump() << "\n";
            }
        }
    } else {
        out << pad << value.dump() << "\n";
    }
}

void emit(const Json& report, const std::string& format) {
    if (format == "table")
        render_table(report, std::cout);
    else
        std::cout << report.dump(2) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact clone, commutant, and rig-matrix calculator over finite carriers"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));

    // rig-validate
    auto* rig_validate = app.add_subcommand("rig-validate", "check the rig axioms of a table");
    std::string rv_rig, rv_file, rv_inline;
    rig_validate->add_option("--rig", rv_rig, "standard rig name");
    rig_validate->add_option("--file", rv_file, "path to a finite-rig JSON document");
    rig_validate->add_option("--inline", rv_inline, "inline finite-rig JSON");

    // kron
    auto* kron = app.add_subcommand("kron", "Kronecker product of two matrices");
    std::string k_rig = "int", k_x, k_y;
    bool k_second = false;
    kron->add_option("--rig", k_rig, "rig name or @file with inline tables");
    kron->add_option("--x", k_x, "left operand entries, JSON rows")->required();
    kron->add_option("--y", k_y, "right operand entries, JSON rows")->required();
    kron->add_flag("--second", k_second, "compute the second Kronecker product");

    // commutant
    auto* cmt = app.add_subcommand("commutant", "all operations commuting with the generators");
    std::string c_rig = "bool2", c_gens;
    std::uint32_t c_arity = 1;
    std::uint64_t c_budget = 0;
    cmt->add_option("--rig", c_rig, "carrier rig name");
    cmt->add_option("--gens", c_gens, "theory name, inline JSON, or @file")->required();
    cmt->add_option("--arity", c_arity, "target arity")->required();
    cmt->add_option("--budget", c_budget, "search node budget");

    // clone-gen
    auto* gen = app.add_subcommand("clone-gen", "arity slice of the generated clone");
    std::string g_rig = "bool2", g_gens;
    std::uint32_t g_arity = 1;
    gen->add_option("--rig", g_rig, "carrier rig name");
    gen->add_option("--gens", g_gens, "theory name, inline JSON, or @file")->required();
    gen->add_option("--arity", g_arity, "target arity")->required();

    // check
    auto* check = app.add_subcommand("check", "run a named theorem check");
    std::string ck_name;
    std::uint32_t ck_mod = 3, ck_max_arity = 2;
    long ck_base = 2;
    std::string ck_left, ck_right;
    std::uint64_t ck_budget = 0;
    check
        ->add_option("name", ck_name,
                     "balanced-slat | uslat-top | ring-affine | modules-mutual | saturation | "
                     "dadic-identity | mutual | all")
        ->required();
    check->add_option("--mod", ck_mod, "modulus for ring-affine / modules-mutual");
    check->add_option("--base", ck_base, "base for dadic-identity");
    check->add_option("--left", ck_left, "left theory for mutual");
    check->add_option("--right", ck_right, "right theory for mutual");
    check->add_option("--max-arity", ck_max_arity, "largest arity for mutual");
    check->add_option("--budget", ck_budget, "search node budget");

    // affine-ext
    auto* aff = app.add_subcommand("affine-ext", "probe a sampled map for affine extendability");
    std::string a_ring = "int", a_phi;
    aff->add_option("--ring", a_ring, "int or dadic<d>");
    aff->add_option("--phi", a_phi, "sampled map JSON or @file")->required();

    // dadic
    auto* dad = app.add_subcommand("dadic", "exact d-adic fraction arithmetic");
    long d_base = 2;
    std::string d_op, d_a, d_b;
    dad->add_option("--base", d_base, "the base d");
    dad->add_option("--op", d_op, "add | mul | neg | leq | is-positive")->required();
    dad->add_option("--a", d_a, "first operand")->required();
    dad->add_option("--b", d_b, "second operand");

    for (CLI::App* sub : app.get_subcommands(nullptr))
        sub->fallthrough(); // global flags may follow the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return exit_usage;
    }

    if (rig_validate->parsed()) {
        FiniteRig tables;
        if (!rv_file.empty())
            tables = finite_rig_from_json(parse_json(slurp(rv_file)));
        else if (!rv_inline.empty())
            tables = finite_rig_from_json(parse_json(rv_inline));
        else if (!rv_rig.empty()) {
            const RigHandle rig = standard_rig(rv_rig);
            if (!rig->is_finite()) {
                emit(Json{{"schema", 1}, {"ok", true}, {"violations", Json::array()},
                          {"note", "exact carriers satisfy the ring axioms by construction"}},
                     format);
                return exit_ok;
            }
            tables = rig->tables();
        } else {
            throw ParameterError("rig-validate needs --rig, --file, or --inline");
        }
        const ValidationReport report = validate_rig(tables);
        Json violations = Json::array();
        for (const auto& v : report.violations)
            violations.push_back(Json{{"axiom", v.axiom}, {"witness", v.witness}});
        emit(Json{{"schema", 1}, {"ok", report.ok}, {"violations", violations}}, format);
        return report.ok ? exit_ok : exit_check_failed;
    }

    if (kron->parsed()) {
        const RigHandle rig = !k_rig.empty() && k_rig.front() == '@'
                                  ? rig_from_json(parse_json(slurp(k_rig.substr(1))))
                                  : standard_rig(k_rig);
        const RigMatrix x = matrix_from_entries(parse_json(k_x), rig);
        const RigMatrix y = matrix_from_entries(parse_json(k_y), rig);
        const RigMatrix product = k_second ? kron_second(x, y) : kron_first(x, y);
        Json report = matrix_to_json(product);
        report["schema"] = 1;
        emit(report, format);
        return exit_ok;
    }

    if (cmt->parsed()) {
        const GeneratorSet gens = resolve_generators(c_gens, c_rig);
        const CommutantResult result = commutant(gens, c_arity, limits_from(c_budget));
        emit(commutant_report(gens, c_arity, result), format);
        return exit_ok;
    }

    if (gen->parsed()) {
        const GeneratorSet gens = resolve_generators(g_gens, g_rig);
        const CloneSlice slice = generate_clone(gens, g_arity);
        Json generators = Json::array();
        for (const OpTable& g : gens.generators)
            generators.push_back(optable_to_json(g));
        Json report = slice_to_json(slice);
        report["schema"] = 1;
        report["generators"] = generators;
        emit(report, format);
        return exit_ok;
    }

    if (check->parsed()) {
        const SearchLimits limits = limits_from(ck_budget);
        Json report;
        if (ck_name == "balanced-slat")
            report = checks::balanced_slat(limits);
        else if (ck_name == "uslat-top")
            report = checks::uslat_top(limits);
        else if (ck_name == "ring-affine")
            report = checks::ring_affine(ck_mod, limits);
        else if (ck_name == "modules-mutual")
            report = checks::modules_mutual(ck_mod, limits);
        else if (ck_name == "saturation")
            report = checks::saturation(limits);
        else if (ck_name == "dadic-identity")
            report = checks::dadic_identity(ck_base);
        else if (ck_name == "mutual") {
            if (ck_left.empty() || ck_right.empty())
                throw ParameterError("mutual needs --left and --right theory names");
            report = checks::mutual(parse_theory(ck_left), parse_theory(ck_right), ck_max_arity,
                                    limits);
        } else if (ck_name == "all")
            report = checks::run_all(limits);
        else
            throw ParameterError("unknown check: \"" + ck_name + "\"");
        emit(report, format);
        return report.at("pass").get<bool>() ? exit_ok : exit_check_failed;
    }

    if (aff->parsed()) {
        const RigHandle ring = standard_rig(a_ring);
        if (ring->is_finite())
            throw ParameterError("affine-ext works over the exact carriers int and dadic<d>");
        const std::string text = !a_phi.empty() && a_phi.front() == '@'
                                     ? slurp(a_phi.substr(1))
                                     : a_phi;
        const Json j = parse_json(text);
        if (!j.is_object() || !j.contains("n") || !j.contains("at_zero") ||
            !j.contains("at_basis") || !j.contains("probes"))
            throw StructuralError("sampled map needs n, at_zero, at_basis, probes");
        const auto value_of = [&](const Json& cell) -> RigValue {
            if (cell.is_number_integer())
                return ring->value_from_string(std::to_string(cell.get<long>()));
            if (cell.is_string())
                return ring->value_from_string(cell.get<std::string>());
            throw StructuralError("values must be integers or literals");
        };
        const std::uint32_t n = j["n"].get<std::uint32_t>();
        std::vector<RigValue> at_basis;
        for (const Json& cell : j["at_basis"])
            at_basis.push_back(value_of(cell));
        std::vector<std::pair<std::vector<RigValue>, RigValue>> probes;
        for (const Json& probe : j["probes"]) {
            if (!probe.is_object() || !probe.contains("x") || !probe.contains("value"))
                throw StructuralError("each probe needs x and value");
            std::vector<RigValue> x;
            for (const Json& cell : probe["x"])
                x.push_back(value_of(cell));
            probes.emplace_back(std::move(x), value_of(probe["value"]));
        }
        const SampledMap phi =
            SampledMap::of(ring, n, value_of(j["at_zero"]), std::move(at_basis),
                           std::move(probes));
        const PreorderedRing preordered = PreorderedRing::natural_order(ring);
        const AffineExtensionResult result = affine_extension_check(preordered, phi);
        Json report{{"schema", 1}, {"holds_on_probes", result.holds_on_probes}};
        if (result.violation) {
            Json xs = Json::array();
            for (const RigValue& v : result.violation->probe)
                xs.push_back(ring->value_str(v));
            report["violation"] = Json{{"x", xs},
                                       {"lhs", ring->value_str(result.violation->lhs)},
                                       {"rhs", ring->value_str(result.violation->rhs)}};
        }
        emit(report, format);
        return result.holds_on_probes ? exit_ok : exit_check_failed;
    }

    if (dad->parsed()) {
        const Dadic a = Dadic::parse(d_base, d_a);
        Json report{{"schema", 1}, {"base", d_base}, {"op", d_op}, {"a", a.str()}};
        if (d_op == "neg") {
            report["result"] = (-a).str();
        } else if (d_op == "is-positive") {
            report["result"] = a.is_nonneg();
        } else {
            if (d_b.empty())
                throw ParameterError("binary d-adic operations need --b");
            const Dadic b = Dadic::parse(d_base, d_b);
            report["b"] = b.str();
            if (d_op == "add")
                report["result"] = (a + b).str();
            else if (d_op == "mul")
                report["result"] = (a * b).str();
            else if (d_op == "leq")
                report["result"] = leq(a, b);
            else
                throw ParameterError("unknown d-adic operation: \"" + d_op + "\"");
        }
        emit(report, format);
        return exit_ok;
    }

    return exit_usage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const clonelab::ResourceError& e) {
        std::cerr << "resource budget exhausted: " << e.what() << "\n";
        return exit_budget;
    } catch (const clonelab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
