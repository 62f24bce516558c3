#include "trinv/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "trinv/canon.hpp"
#include "trinv/census.hpp"
#include "trinv/parser.hpp"

namespace trinv {
namespace {

using nlohmann::json;

struct Rendered {
    json payload;
    std::string text;
};

// --input takes either a path or the map text itself.
std::string read_input_arg(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg, std::ios::binary);
        if (!in) fail(errc::usage_error, "cannot open " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// A field tag inside the input wins; an explicit --field must agree with it.
Field field_for_map(const std::string& flag_value, bool flag_given, const MapSource& src) {
    if (!src.field_tag.empty()) {
        Field tagged = parse_field_tag(src.field_tag);
        if (flag_given) {
            Field flagged = parse_field_tag(flag_value);
            if (!same_field(flagged, tagged)) {
                fail(errc::field_mismatch, "--field " + flag_value +
                                               " conflicts with the input's field tag " +
                                               src.field_tag);
            }
        }
        return tagged;
    }
    return parse_field_tag(flag_value);
}

PolyMap load_map(const std::string& input, const std::string& field_flag, bool field_given,
                 Field* out_field) {
    MapSource src = read_map_source(read_input_arg(input));
    Field f = field_for_map(field_flag, field_given, src);
    if (out_field) *out_field = f;
    return parse_map(src, f);
}

json map_doc(const PolyMap& m) {
    json doc;
    const VarNames& names = xyzw_names();
    for (int i = 0; i < kVarCount; ++i) doc[names[i]] = m.images()[i].str();
    return doc;
}

json form_parameters(const CanonicalForm& form) {
    json params;
    if (const auto* one = std::get_if<FormI>(&form)) {
        params["f"] = one->f.str();
    } else if (const auto* two = std::get_if<FormII>(&form)) {
        params["xi"] = two->xi.str();
        params["eta"] = two->eta.str(eta_slot_names());
    } else {
        const auto& three = std::get<FormIII>(form);
        params["alpha"] = three.alpha.str();
        params["beta"] = three.beta.str();
        params["gamma"] = three.gamma.str(slot_names());
        params["d"] = three.d.str();
        params["a"] = three.a.str();
        params["b"] = three.b.str();
        for (int i = 0; i < 4; ++i) {
            params["f" + std::to_string(i + 1)] = three.generators[i].str();
        }
    }
    return params;
}

void render_parameters_text(std::ostream& out, const CanonicalForm& form) {
    if (const auto* one = std::get_if<FormI>(&form)) {
        out << "f: " << one->f.str() << "\n";
    } else if (const auto* two = std::get_if<FormII>(&form)) {
        out << "xi: " << two->xi.str() << "\n";
        out << "eta: " << two->eta.str(eta_slot_names()) << "\n";
    } else {
        const auto& three = std::get<FormIII>(form);
        out << "alpha: " << three.alpha.str() << "\n";
        out << "beta: " << three.beta.str() << "\n";
        out << "gamma: " << three.gamma.str(slot_names()) << "\n";
        out << "d: " << three.d.str() << "\n";
        out << "a: " << three.a.str() << "\n";
        out << "b: " << three.b.str() << "\n";
        for (int i = 0; i < 4; ++i) {
            out << "f" << (i + 1) << ": " << three.generators[i].str() << "\n";
        }
    }
}

Rendered do_check(const std::string& input, const std::string& field_flag, bool field_given) {
    Field f;
    PolyMap m = load_map(input, field_flag, field_given, &f);
    bool triangular = is_triangular(m);
    bool involution = is_involution(m);

    json doc;
    doc["command"] = "check";
    doc["field"] = f->tag();
    doc["map"] = map_doc(m);
    doc["triangular"] = triangular;
    doc["involution"] = involution;

    std::ostringstream text;
    text << "field: " << f->tag() << "\n";
    text << "map: " << m.str() << "\n";
    text << "triangular: " << (triangular ? "yes" : "no") << "\n";
    text << "involution: " << (involution ? "yes" : "no") << "\n";
    if (triangular) {
        TriangularParts parts = triangular_parts(m);
        const VarNames& names = xyzw_names();
        json lambdas, phis;
        for (int i = 0; i < kVarCount; ++i) {
            lambdas[names[i]] = parts.lambdas[i].str();
            phis[names[i]] = parts.phis[i].str();
        }
        doc["lambda"] = lambdas;
        doc["phi"] = phis;
        text << "lambda: [" << parts.lambdas[0].str();
        for (int i = 1; i < kVarCount; ++i) text << ", " << parts.lambdas[i].str();
        text << "]\n";
        for (int i = 0; i < kVarCount; ++i) {
            text << "phi " << names[i] << ": " << parts.phis[i].str() << "\n";
        }
    }
    return {doc, text.str()};
}

Rendered do_classify(const std::string& input, const std::string& field_flag, bool field_given) {
    Field f;
    PolyMap m = load_map(input, field_flag, field_given, &f);
    Classification c = classify(m);

    json doc;
    doc["form"] = form_tag(c.canonical);
    doc["condition"] = c.condition;
    doc["parameters"] = form_parameters(c.canonical);
    doc["conjugator"] = map_doc(c.conjugator.map);
    doc["conjugator_inverse"] = map_doc(c.conjugator.inverse);
    doc["verified"] = true;

    std::ostringstream text;
    text << "form: " << form_tag(c.canonical) << "\n";
    text << "condition: " << c.condition << "\n";
    render_parameters_text(text, c.canonical);
    text << "conjugator: " << c.conjugator.map.str() << "\n";
    text << "conjugator inverse: " << c.conjugator.inverse.str() << "\n";
    text << "verified: yes\n";
    return {doc, text.str()};
}

struct ConstructOpts {
    CLI::Option* f = nullptr;
    CLI::Option* xi = nullptr;
    CLI::Option* eta = nullptr;
    CLI::Option* alpha = nullptr;
    CLI::Option* beta = nullptr;
    CLI::Option* gamma = nullptr;
};

void check_form_options(const std::string& form, const ConstructOpts& o) {
    auto need = [&](CLI::Option* opt, const char* name) {
        if (opt->count() == 0) fail(errc::usage_error, "--form " + form + " requires " + name);
    };
    auto forbid = [&](CLI::Option* opt, const char* name) {
        if (opt->count() > 0) {
            fail(errc::usage_error, std::string(name) + " does not apply to --form " + form);
        }
    };
    if (form == "i") {
        need(o.f, "--f");
        forbid(o.xi, "--xi");
        forbid(o.eta, "--eta");
        forbid(o.alpha, "--alpha");
        forbid(o.beta, "--beta");
        forbid(o.gamma, "--gamma");
    } else if (form == "ii") {
        need(o.xi, "--xi");
        forbid(o.f, "--f");
        forbid(o.alpha, "--alpha");
        forbid(o.beta, "--beta");
        forbid(o.gamma, "--gamma");
    } else {
        need(o.alpha, "--alpha");
        need(o.beta, "--beta");
        forbid(o.f, "--f");
        forbid(o.xi, "--xi");
        forbid(o.eta, "--eta");
    }
}

Rendered do_construct(const Field& f, const std::string& form, const std::string& f_text,
                      const std::string& xi_text, const std::string& eta_text,
                      const std::string& alpha_text, const std::string& beta_text,
                      const std::string& gamma_text) {
    PolyMap m = PolyMap::identity(f);
    CanonicalForm canonical = FormI{Polynomial::zero(f)};
    if (form == "i") {
        Polynomial fp = parse_poly(f_text, f);
        m = make_form_i(fp);
        canonical = FormI{fp};
    } else if (form == "ii") {
        Polynomial xi = parse_poly(xi_text, f);
        Polynomial eta = parse_poly(eta_text, f, SlotContext::eta);
        m = make_form_ii(xi, eta);
        canonical = FormII{xi, eta};
    } else {
        Polynomial alpha = parse_poly(alpha_text, f);
        Polynomial beta = parse_poly(beta_text, f);
        Polynomial gamma = parse_poly(gamma_text, f, SlotContext::gamma);
        auto built = make_form_iii(alpha, beta, gamma);
        m = built.first;
        canonical = built.second;
    }
    if (!is_involution(m)) {
        throw InternalInvariantViolation("constructed canonical map is not an involution");
    }

    json doc;
    doc["command"] = "construct";
    doc["field"] = f->tag();
    doc["form"] = form_tag(canonical);
    doc["map"] = map_doc(m);
    doc["parameters"] = form_parameters(canonical);
    doc["involution"] = true;

    std::ostringstream text;
    text << "field: " << f->tag() << "\n";
    text << "form: " << form_tag(canonical) << "\n";
    text << "map: " << m.str() << "\n";
    render_parameters_text(text, canonical);
    text << "involution: yes\n";
    return {doc, text.str()};
}

DegreeBounds parse_bounds(const std::string& text) {
    std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 3) {
        fail(errc::usage_error, "--bounds wants three entries d2,d3,d4 ('-' pins a phi to zero)");
    }
    auto one = [](const std::string& tok) -> std::optional<unsigned> {
        std::string t = trimmed(tok);
        if (t == "-" || t == "none") return std::nullopt;
        unsigned v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size()) {
            fail(errc::usage_error, "bad --bounds entry '" + tok + "' (want a degree or '-')");
        }
        return v;
    };
    DegreeBounds b;
    b.d2 = one(parts[0]);
    b.d3 = one(parts[1]);
    b.d4 = one(parts[2]);
    return b;
}

std::vector<uint16_t> parse_phi1(const std::string& text, const Field& f) {
    std::vector<uint16_t> out;
    for (const std::string& tok : split(text, ',')) {
        std::string t = trimmed(tok);
        unsigned v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size() || v >= f->order()) {
            fail(errc::usage_error, "bad --phi1 entry '" + tok + "' (want an element index below " +
                                        std::to_string(f->order()) + ")");
        }
        out.push_back(static_cast<uint16_t>(v));
    }
    return out;
}

uint64_t resolve_budget(bool flag_given, uint64_t flag_value) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("TRINV_CENSUS_BUDGET")) {
        std::string t = trimmed(env);
        uint64_t v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size() || v == 0) {
            fail(errc::usage_error,
                 std::string("TRINV_CENSUS_BUDGET is not a positive integer: ") + env);
        }
        return v;
    }
    return kDefaultCensusBudget;
}

std::string bound_text(const std::optional<unsigned>& b) {
    return b ? std::to_string(*b) : "-";
}

Rendered do_census(const std::string& field_flag, const DegreeBounds& bounds, uint64_t budget) {
    Field f = parse_field_tag(field_flag);
    uint64_t cardinality = enumeration_cardinality(f, bounds);
    CensusReport report = census_classify(f, bounds, budget);

    json doc;
    doc["command"] = "census";
    doc["field"] = f->tag();
    json jb;
    jb["d2"] = bounds.d2 ? json(*bounds.d2) : json();
    jb["d3"] = bounds.d3 ? json(*bounds.d3) : json();
    jb["d4"] = bounds.d4 ? json(*bounds.d4) : json();
    doc["bounds"] = jb;
    if (bounds.phi1_values.empty()) {
        doc["phi1"] = "all";
    } else {
        doc["phi1"] = bounds.phi1_values;
    }
    doc["budget"] = budget;
    doc["cardinality"] = cardinality;
    doc["total_maps"] = report.total_maps;
    doc["involutions"] = report.involutions;
    json per;
    for (int c = 0; c < 3; ++c) per[std::to_string(c + 1)] = report.per_condition[c];
    doc["per_condition"] = per;
    doc["failures"] = report.failures;

    std::ostringstream text;
    text << "field: " << f->tag() << "\n";
    text << "bounds: d2 = " << bound_text(bounds.d2) << ", d3 = " << bound_text(bounds.d3)
         << ", d4 = " << bound_text(bounds.d4) << "\n";
    if (bounds.phi1_values.empty()) {
        text << "phi1: all\n";
    } else {
        text << "phi1:";
        for (uint16_t v : bounds.phi1_values) text << " " << v;
        text << "\n";
    }
    text << "budget: " << budget << "\n";
    text << "cardinality: " << cardinality << "\n";
    text << "total maps: " << report.total_maps << "\n";
    text << "involutions: " << report.involutions << "\n";
    for (int c = 0; c < 3; ++c) {
        text << "condition " << (c + 1) << ": " << report.per_condition[c] << "\n";
    }
    text << "failures: " << report.failures.size() << "\n";
    for (const std::string& msg : report.failures) text << "  " << msg << "\n";
    return {doc, text.str()};
}

Rendered do_fixring(const std::string& field_flag, const std::string& alpha_text,
                    const std::string& beta_text, unsigned max_degree) {
    Field f = parse_field_tag(field_flag);
    Polynomial alpha = parse_poly(alpha_text, f);
    Polynomial beta = parse_poly(beta_text, f);
    auto built = make_form_iii(alpha, beta, Polynomial::zero(f));
    const PolyMap& t = built.first;
    const FormIII& data = built.second;
    std::vector<Polynomial> basis = fixed_space_basis(t, max_degree);

    json doc;
    doc["command"] = "fixring";
    doc["field"] = f->tag();
    doc["alpha"] = alpha.str();
    doc["beta"] = beta.str();
    doc["max_degree"] = max_degree;
    json gens;
    for (int i = 0; i < 4; ++i) gens["f" + std::to_string(i + 1)] = data.generators[i].str();
    doc["generators"] = gens;
    doc["dimension"] = basis.size();
    json basis_json = json::array();
    json decomp_json = json::array();
    std::ostringstream lines;
    for (const Polynomial& p : basis) {
        Polynomial gamma = decompose_fixed_iii(p, alpha, beta);
        basis_json.push_back(p.str());
        json entry;
        entry["f"] = p.str();
        entry["gamma"] = gamma.str(slot_names());
        decomp_json.push_back(entry);
        lines << "  " << p.str() << "  =  " << gamma.str(slot_names()) << "\n";
    }
    doc["basis"] = basis_json;
    doc["decompositions"] = decomp_json;

    std::ostringstream text;
    text << "field: " << f->tag() << "\n";
    text << "alpha: " << alpha.str() << "\n";
    text << "beta: " << beta.str() << "\n";
    text << "max degree: " << max_degree << "\n";
    for (int i = 0; i < 4; ++i) {
        text << "f" << (i + 1) << ": " << data.generators[i].str() << "\n";
    }
    text << "dimension: " << basis.size() << "\n";
    text << "basis (each written in the generator slots g1..g4):\n";
    text << lines.str();
    return {doc, text.str()};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult result;

    CLI::App app{"triangular involutions of k[x,y,z,w] in characteristic two", "trinv"};
    app.require_subcommand(1);

    struct Common {
        std::string field = "gf2";
        std::string output = "text";
        uint64_t seed = 0;
        CLI::Option* field_opt = nullptr;
    };
    auto add_common = [](CLI::App* sub, Common& c) {
        c.field_opt = sub->add_option("--field", c.field,
                                      "coefficient field tag: gf2, or gf2^m:<modulus bits>")
                          ->capture_default_str();
        sub->add_option("--output", c.output, "text or structured (JSON)")
            ->check(CLI::IsMember({"text", "structured"}))
            ->capture_default_str();
        sub->add_option("--seed", c.seed,
                        "accepted for driver compatibility; every subcommand is deterministic");
    };

    Common check_c, classify_c, construct_c, census_c, fixring_c;
    std::string check_input, classify_input;
    std::string form, f_text, xi_text, eta_text = "0", alpha_text, beta_text, gamma_text = "0";
    std::string bounds_text, phi1_text;
    std::string fix_alpha, fix_beta;
    uint64_t budget_flag = 0;
    unsigned max_degree = 3;

    CLI::App* check_cmd =
        app.add_subcommand("check", "verify a map is a triangular involution and show its parts");
    add_common(check_cmd, check_c);
    check_cmd->add_option("--input", check_input, "map source: a file path or the literal text")
        ->required();

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "conjugate a triangular involution into its canonical form");
    add_common(classify_cmd, classify_c);
    classify_cmd->add_option("--input", classify_input, "map source: a file path or the literal text")
        ->required();

    CLI::App* construct_cmd =
        app.add_subcommand("construct", "build a canonical-form involution from its parameters");
    add_common(construct_cmd, construct_c);
    construct_cmd->add_option("--form", form, "i, ii or iii")
        ->required()
        ->check(CLI::IsMember({"i", "ii", "iii"}));
    ConstructOpts copts;
    copts.f = construct_cmd->add_option("--f", f_text, "form i: f in k[x,y,z]");
    copts.xi = construct_cmd->add_option("--xi", xi_text, "form ii: xi in k[x,y], nonzero");
    copts.eta = construct_cmd->add_option("--eta", eta_text,
                                          "form ii: eta over the slots x, y, t (default 0)");
    copts.alpha = construct_cmd->add_option("--alpha", alpha_text, "form iii: alpha in k[x], nonzero");
    copts.beta = construct_cmd->add_option("--beta", beta_text, "form iii: beta in k[x,y], nonzero");
    copts.gamma = construct_cmd->add_option(
        "--gamma", gamma_text, "form iii: gamma over the slots g1, g2, g3, g4 (default 0)");

    CLI::App* census_cmd = app.add_subcommand(
        "census", "enumerate a window of triangular maps and cross-check the classifier");
    add_common(census_cmd, census_c);
    census_cmd
        ->add_option("--bounds", bounds_text,
                     "degree bounds d2,d3,d4; '-' pins that phi to zero")
        ->required();
    census_cmd->add_option("--phi1", phi1_text,
                           "comma list of allowed phi1 constants (default: the whole field)");
    CLI::Option* budget_opt = census_cmd->add_option(
        "--budget", budget_flag, "maximum window size (default: TRINV_CENSUS_BUDGET or 1048576)");

    CLI::App* fixring_cmd = app.add_subcommand(
        "fixring", "basis of the bounded-degree fixed space of a form-iii action");
    add_common(fixring_cmd, fixring_c);
    fixring_cmd->add_option("--alpha", fix_alpha, "alpha in k[x], nonzero")->required();
    fixring_cmd->add_option("--beta", fix_beta, "beta in k[x,y], nonzero")->required();
    fixring_cmd->add_option("--max-degree", max_degree, "total degree bound of the space")
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("trinv");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        const Common* common = &check_c;
        if (classify_cmd->parsed()) common = &classify_c;
        if (construct_cmd->parsed()) common = &construct_c;
        if (census_cmd->parsed()) common = &census_c;
        if (fixring_cmd->parsed()) common = &fixring_c;
        result.structured = common->output == "structured";
        bool field_given = common->field_opt->count() > 0;

        Rendered r;
        if (check_cmd->parsed()) {
            r = do_check(check_input, common->field, field_given);
        } else if (classify_cmd->parsed()) {
            r = do_classify(classify_input, common->field, field_given);
        } else if (construct_cmd->parsed()) {
            check_form_options(form, copts);
            Field f = parse_field_tag(common->field);
            r = do_construct(f, form, f_text, xi_text, eta_text, alpha_text, beta_text, gamma_text);
        } else if (census_cmd->parsed()) {
            DegreeBounds bounds = parse_bounds(bounds_text);
            if (!phi1_text.empty()) {
                bounds.phi1_values = parse_phi1(phi1_text, parse_field_tag(common->field));
            }
            r = do_census(common->field, bounds, resolve_budget(budget_opt->count() > 0, budget_flag));
        } else {
            r = do_fixring(common->field, fix_alpha, fix_beta, max_degree);
        }
        result.payload = std::move(r.payload);
        result.text = std::move(r.text);
    } catch (const CLI::CallForHelp&) {
        result.text = app.help();
        result.payload = json{{"help", result.text}};
    } catch (const CLI::ParseError& e) {
        result.status = errc::usage_error;
        result.message = e.what();
    } catch (const InternalInvariantViolation& e) {
        result.status = errc::internal_invariant_violation;
        result.message = e.what();
    } catch (const Error& e) {
        result.status = e.code();
        result.message = e.what();
    } catch (const std::exception& e) {
        result.status = errc::internal_error;
        result.message = e.what();
    }

    if (result.status != errc::ok) {
        result.payload = json{{"exit_code", exit_code(result.status)},
                              {"message", result.message},
                              {"status", errc_name(result.status)}};
        result.text =
            std::string("error[") + errc_name(result.status) + "]: " + result.message + "\n";
    }
    return result;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    if (argc > 1) args.assign(argv + 1, argv + argc);

    CommandResult result;
    try {
        result = run_command(args);
    } catch (const std::exception& e) {
        std::cerr << "error[InternalError]: " << e.what() << "\n";
        return exit_code(errc::internal_error);
    } catch (...) {
        std::cerr << "error[InternalError]: unexpected failure\n";
        return exit_code(errc::internal_error);
    }

    if (result.status == errc::ok) {
        if (result.structured) {
            std::cout << result.payload.dump(2) << "\n";
        } else {
            std::cout << result.text;
        }
        return exit_code(errc::ok);
    }
    if (result.status == errc::internal_invariant_violation) {
        std::cerr << "INTERNAL INVARIANT VIOLATION: " << result.message << "\n";
        return exit_code(result.status);
    }
    if (result.structured) std::cout << result.payload.dump(2) << "\n";
    std::cerr << result.text;
    return exit_code(result.status);
}

}  // namespace trinv
