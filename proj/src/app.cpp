#include "ozaki/app.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ozaki/classes.hpp"
#include "ozaki/functionals.hpp"
#include "ozaki/verifier.hpp"

namespace ozaki::app {

using Json = nlohmann::ordered_json;

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::BoundViolation: return "bound_violation";
        case Status::Error: return "error";
    }
    return "error";
}

int exit_code(Status s) {
    switch (s) {
        case Status::Ok: return 0;
        case Status::BoundViolation: return 2;
        case Status::Error: return 1;
    }
    return 1;
}

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void dump_into(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += Json(key).dump();
                out += ':';
                dump_into(value, out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                dump_into(j[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            break;
        default:
            out += j.dump();
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

}  // namespace

std::string dump_json(const Json& j) {
    std::string out;
    dump_into(j, out);
    return out;
}

std::string emit(const OutputEnvelope& envelope, Format format) {
    if (format == Format::Csv) {
        if (!envelope.table) {
            throw std::invalid_argument("CSV output is only available for sample and optimize");
        }
        std::string out;
        auto write_row = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += csv_field(row[i]);
            }
            out += '\n';
        };
        write_row(envelope.table->columns);
        for (const auto& row : envelope.table->rows) write_row(row);
        return out;
    }
    Json j = Json::object();
    j["tool_version"] = envelope.tool_version;
    j["command_echo"] = envelope.command_echo;
    if (envelope.seed) j["seed"] = *envelope.seed;
    j["status"] = to_string(envelope.status);
    j["payload"] = envelope.payload;
    return dump_json(j) + "\n";
}

std::vector<std::complex<double>> parse_complex_list(std::string_view text) {
    std::vector<std::complex<double>> out;
    if (text.empty()) return out;
    auto parse_real = [](std::string_view s) {
        const std::string owned(s);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(owned, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != owned.size()) {
            throw std::invalid_argument("malformed number '" + owned + "' in complex list");
        }
        return v;
    };
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view item = text.substr(start, comma - start);
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos) {
            out.emplace_back(parse_real(item), 0.0);
        } else {
            out.emplace_back(parse_real(item.substr(0, colon)), parse_real(item.substr(colon + 1)));
        }
        start = comma + 1;
    }
    return out;
}

namespace {

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json rational_json(const Rational& r) { return Json{{"rational", r.str()}, {"decimal", r.value()}}; }

Json triple_json(const CoeffTriple& t) {
    return Json{{"a2", complex_json(t.a2)}, {"a3", complex_json(t.a3)}, {"a4", complex_json(t.a4)}};
}

void put_series(Json& j, const TruncatedSeries& s) {
    Json re = Json::array();
    Json im = Json::array();
    for (const Complex& c : s.coeffs()) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    j["coefficients"] = std::move(re);
    j["coefficients_im"] = std::move(im);
}

Json complex_list_json(const std::vector<Complex>& v) {
    Json a = Json::array();
    for (const Complex& z : v) a.push_back(complex_json(z));
    return a;
}

Json report_json(const FunctionalReport& r) {
    return Json{{"A2", complex_json(r.A2)},         {"A3", complex_json(r.A3)},
                {"A4", complex_json(r.A4)},         {"gamma1", complex_json(r.gamma1)},
                {"gamma2", complex_json(r.gamma2)}, {"Gamma1", complex_json(r.Gamma1)},
                {"Gamma2", complex_json(r.Gamma2)}, {"Gamma3", complex_json(r.Gamma3)},
                {"S3", complex_json(r.S3)},         {"S4", complex_json(r.S4)},
                {"T21_log", r.T21_log},             {"diff_A", r.diff_A},
                {"diff_Gamma", r.diff_Gamma}};
}

std::string bound_text(const BoundEntry& e) {
    if (e.lower && e.upper) return e.lower->value.str() + ".." + e.upper->value.str();
    return e.upper ? e.upper->value.str() : e.lower->value.str();
}

Json bound_json(const BoundEntry& e) {
    Json j{{"class", to_string(e.label)}, {"functional", to_string(e.functional)}, {"kind", to_string(e.kind)}};
    if (e.lower) j["lower"] = Json{{"value", rational_json(e.lower->value)}, {"witness", to_string(e.lower->witness)}};
    if (e.upper) j["upper"] = Json{{"value", rational_json(e.upper->value)}, {"witness", to_string(e.upper->witness)}};
    return j;
}

std::vector<ClassLabel> classes_for(const std::string& which) {
    if (which == "all") return {ClassLabel::F, ClassLabel::G};
    return {parse_class_label(which)};
}

// Options shared by the subcommands.
struct Options {
    std::string format = "json";
    std::string class_name = "all";
    std::string name;
    std::string schwarz;
    std::string caratheodory;
    std::string extremal;
    std::string objective = "all";
    std::size_t order = 8;
    std::uint64_t seed = 0;
    std::size_t samples = 10000;
    std::size_t max_zeros = 3;
    int resolution = 2000;
    int refine = 3;
    double tol = 1e-9;
    bool no_extremals = false;
};

struct Member {
    OzakiFunction fn;
    Json source;
};

Member member_from_options(const Options& o, bool allow_extremal) {
    const int given = !o.schwarz.empty() + !o.caratheodory.empty() + (allow_extremal && !o.extremal.empty());
    if (given != 1) {
        throw CLI::ValidationError(allow_extremal ? "exactly one of --schwarz, --caratheodory, --extremal is required"
                                                  : "exactly one of --schwarz, --caratheodory is required");
    }
    if (!o.extremal.empty()) {
        OzakiFunction fn = extremal_member(o.extremal, o.order);
        return {std::move(fn), Json{{"kind", "extremal"}, {"name", o.extremal}}};
    }
    if (o.class_name != "F" && o.class_name != "G") {
        throw CLI::ValidationError("--class must be F or G for a Schwarz or Caratheodory input");
    }
    const ClassLabel label = parse_class_label(o.class_name);
    if (!o.schwarz.empty()) {
        SchwarzCoeffs w{parse_complex_list(o.schwarz)};
        OzakiFunction fn = build_member(label, w, o.order);
        return {std::move(fn), Json{{"kind", "schwarz"}, {"values", complex_list_json(w.c)}}};
    }
    CaratheodoryCoeffs p{parse_complex_list(o.caratheodory)};
    OzakiFunction fn = build_member(label, p, o.order);
    return {std::move(fn), Json{{"kind", "caratheodory"}, {"values", complex_list_json(p.p)}}};
}

OutputEnvelope cmd_extremal(const Options& o) {
    const OzakiFunction fn = extremal_member(o.name, o.order);
    OutputEnvelope env;
    env.payload["name"] = o.name;
    env.payload["class"] = to_string(fn.label);
    env.payload["order"] = o.order;
    put_series(env.payload, fn.f.series());
    return env;
}

OutputEnvelope cmd_coeffs(const Options& o) {
    const Member m = member_from_options(o, false);
    const CoeffTriple from_series = CoeffTriple::of(m.fn.f);
    SchwarzCoeffs w;
    CaratheodoryCoeffs p;
    if (const auto* sc = std::get_if<SchwarzCoeffs>(&m.fn.provenance)) {
        w = *sc;
        p = caratheodory_from_schwarz(w, 3);
    } else {
        p = std::get<CaratheodoryCoeffs>(m.fn.provenance);
        w = schwarz_from_caratheodory(p, 3);
    }
    const CoeffTriple via_schwarz = coeffs_from_schwarz_direct(m.fn.label, w);
    const CoeffTriple via_p = coeffs_from_caratheodory_direct(m.fn.label, p);
    double discrepancy = 0.0;
    for (const CoeffTriple& t : {via_schwarz, via_p}) {
        discrepancy = std::max({discrepancy, std::abs(t.a2 - from_series.a2), std::abs(t.a3 - from_series.a3),
                                std::abs(t.a4 - from_series.a4)});
    }
    OutputEnvelope env;
    env.payload["class"] = to_string(m.fn.label);
    env.payload["order"] = o.order;
    env.payload["input"] = m.source;
    put_series(env.payload, m.fn.f.series());
    env.payload["triple_series"] = triple_json(from_series);
    env.payload["triple_schwarz_direct"] = triple_json(via_schwarz);
    env.payload["triple_caratheodory_direct"] = triple_json(via_p);
    env.payload["max_discrepancy"] = discrepancy;
    return env;
}

OutputEnvelope cmd_report(const Options& o) {
    const Member m = member_from_options(o, true);
    const FunctionalReport r = full_report(m.fn);
    OutputEnvelope env;
    env.payload["class"] = to_string(m.fn.label);
    env.payload["order"] = o.order;
    env.payload["source"] = m.source;
    put_series(env.payload, m.fn.f.series());
    env.payload["functionals"] = report_json(r);
    env.payload["log_coefficients"] = complex_list_json(logarithmic_coefficients(m.fn.f));
    env.payload["log_inverse_coefficients"] = complex_list_json(logarithmic_inverse_coefficients(m.fn.f));
    Json checks = Json::array();
    for (const BoundEntry& e : ledger_for(m.fn.label)) {
        const double v = functional_value(r, e.functional);
        const bool within = (!e.upper || v <= e.upper->value.value() + o.tol) &&
                            (!e.lower || v >= e.lower->value.value() - o.tol);
        if (!within) env.status = Status::BoundViolation;
        checks.push_back(Json{{"functional", to_string(e.functional)}, {"value", v}, {"bound", bound_text(e)},
                              {"within", within}});
    }
    env.payload["ledger_checks"] = std::move(checks);
    return env;
}

OutputEnvelope cmd_verify(const Options& o) {
    const std::vector<ClassLabel> wanted = classes_for(o.class_name);
    OutputEnvelope env;
    Json entries = Json::array();
    bool all_passed = true;
    for (const ExtremalCheck& check : check_extremals()) {
        if (std::find(wanted.begin(), wanted.end(), check.entry.label) == wanted.end()) continue;
        Json sides = Json::array();
        for (const SideCheck& s : check.sides) {
            sides.push_back(Json{{"side", s.upper ? "upper" : "lower"},
                                 {"bound", rational_json(s.bound)},
                                 {"witness", to_string(s.witness)},
                                 {"computed", s.computed},
                                 {"residual", s.residual},
                                 {"passed", std::abs(s.residual) <= kSharpnessTol}});
        }
        const bool passed = check.passed();
        all_passed = all_passed && passed;
        Json e = bound_json(check.entry);
        e["sides"] = std::move(sides);
        e["passed"] = passed;
        entries.push_back(std::move(e));
    }
    env.payload["class"] = o.class_name;
    env.payload["tolerance"] = kSharpnessTol;
    env.payload["witness_order"] = kWitnessOrder;
    env.payload["entries"] = std::move(entries);
    env.payload["passed"] = all_passed;
    if (!all_passed) env.status = Status::BoundViolation;
    return env;
}

OutputEnvelope cmd_optimize(const Options& o) {
    std::vector<ObjectiveId> ids;
    if (o.objective == "all") {
        ids.assign(kAllObjectives.begin(), kAllObjectives.end());
    } else {
        ids.push_back(parse_objective(o.objective));
    }
    OutputEnvelope env;
    Table table{{"objective", "mode", "value", "arg_x", "arg_y", "paper_value", "gap"}, {}};
    Json results = Json::array();
    for (ObjectiveId id : ids) {
        const ReferenceExtremum pe = reference_extremum(id);
        const OptResult r = grid_extremize(id, pe.mode, o.resolution, o.refine);
        const double bound = pe.value.value();
        const bool beyond = pe.mode == OptMode::Max ? r.value > bound + o.tol : r.value < bound - o.tol;
        if (beyond) env.status = Status::BoundViolation;
        results.push_back(Json{{"objective", to_string(id)},
                               {"mode", to_string(r.mode)},
                               {"domain", domain_of(id).kind == DomainKind::Box ? "box" : "parabolic"},
                               {"value", r.value},
                               {"argpoint", Json::array({r.argpoint.x, r.argpoint.y})},
                               {"grid_resolution", r.grid_resolution},
                               {"refine_iterations", r.refine_iterations},
                               {"paper_value", rational_json(pe.value)},
                               {"gap", *r.gap},
                               {"beyond_bound", beyond}});
        table.rows.push_back({std::string(to_string(id)), std::string(to_string(r.mode)), format_double(r.value),
                              format_double(r.argpoint.x), format_double(r.argpoint.y), pe.value.str(),
                              format_double(*r.gap)});
    }
    env.payload["tolerance"] = o.tol;
    env.payload["results"] = std::move(results);
    env.table = std::move(table);
    return env;
}

OutputEnvelope cmd_sample(const Options& o) {
    OutputEnvelope env;
    env.seed = o.seed;
    Table table{{"name", "empirical_min", "empirical_max", "bound", "margin"}, {}};
    Json reports = Json::array();
    for (ClassLabel label : classes_for(o.class_name)) {
        SampleConfig cfg;
        cfg.label = label;
        cfg.count = o.samples;
        cfg.order = o.order;
        cfg.seed = o.seed;
        cfg.blaschke_max_zeros = o.max_zeros;
        cfg.include_extremals = !o.no_extremals;
        cfg.violation_tolerance = o.tol;
        const SampleReport rep = sample_and_check(cfg);
        if (!rep.ok()) env.status = Status::BoundViolation;
        Json stats = Json::array();
        for (const FunctionalStats& s : rep.stats) {
            stats.push_back(Json{{"name", to_string(s.entry.functional)},
                                 {"empirical_min", s.empirical_min},
                                 {"empirical_max", s.empirical_max},
                                 {"bound", bound_text(s.entry)},
                                 {"margin", s.margin},
                                 {"violations", s.violations}});
            table.rows.push_back({std::string(to_string(label)) + ":" + std::string(to_string(s.entry.functional)),
                                  format_double(s.empirical_min), format_double(s.empirical_max), bound_text(s.entry),
                                  format_double(s.margin)});
        }
        reports.push_back(Json{{"class", to_string(label)},
                               {"seed", rep.seed},
                               {"members", rep.members},
                               {"order", cfg.order},
                               {"include_extremals", cfg.include_extremals},
                               {"violation_tolerance", rep.violation_tolerance},
                               {"violation_count", rep.violation_count},
                               {"worst_violation", rep.worst_violation},
                               {"functionals", std::move(stats)}});
    }
    env.payload["reports"] = std::move(reports);
    env.table = std::move(table);
    return env;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (const std::string& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Coefficient functionals of Ozaki close-to-convex functions", "ozaki"};
    app.require_subcommand(1, 1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_member_inputs = [&](CLI::App* sub) {
        sub->add_option("--class", o.class_name, "Class label (F or G)")->check(CLI::IsMember({"F", "G"}));
        sub->add_option("--schwarz", o.schwarz, "Schwarz coefficients c1,c2,... as re:im");
        sub->add_option("--caratheodory", o.caratheodory, "Caratheodory coefficients p1,p2,... as re:im");
        sub->add_option("--order", o.order, "Truncation order")->check(CLI::Range(4, 64));
        add_format(sub);
    };

    auto* extremal = app.add_subcommand("extremal", "Closed-form extremal function");
    extremal->add_option("name", o.name, "f1, f2, g1 or g2")->required()->check(CLI::IsMember({"f1", "f2", "g1", "g2"}));
    extremal->add_option("--order", o.order, "Truncation order")->check(CLI::Range(4, 64));
    add_format(extremal);

    auto* coeffs = app.add_subcommand("coeffs", "Build a class member and cross-check its initial coefficients");
    add_member_inputs(coeffs);

    auto* report = app.add_subcommand("report", "All coefficient functionals of one function");
    add_member_inputs(report);
    report->add_option("--extremal", o.extremal, "Use an extremal function")
        ->check(CLI::IsMember({"f1", "f2", "g1", "g2"}));
    report->add_option("--tol", o.tol, "Bound tolerance")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Sharpness of every ledger bound at its extremal function");
    verify->add_option("--class", o.class_name, "F, G or all")->check(CLI::IsMember({"F", "G", "all"}));
    add_format(verify);

    auto* optimize = app.add_subcommand("optimize", "Grid extremization of the reduced objectives");
    optimize->add_option("--objective", o.objective, "Objective id or all");
    optimize->add_option("--resolution", o.resolution, "Grid points per axis")->check(CLI::Range(100, 20000));
    optimize->add_option("--refine", o.refine, "Refinement rounds")->check(CLI::Range(0, 12));
    optimize->add_option("--tol", o.tol, "Tolerance beyond the proved extremum")->check(CLI::PositiveNumber);
    add_format(optimize);

    auto* sample = app.add_subcommand("sample", "Random class members checked against the ledger");
    sample->add_option("--class", o.class_name, "F, G or all")->check(CLI::IsMember({"F", "G", "all"}));
    sample->add_option("--samples", o.samples, "Random members per class")->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
    sample->add_option("--order", o.order, "Truncation order")->check(CLI::Range(8, 64));
    sample->add_option("--seed", o.seed, "Random seed");
    sample->add_option("--max-zeros", o.max_zeros, "Blaschke zeros per product")->check(CLI::Range(0, 8));
    sample->add_option("--tol", o.tol, "Violation tolerance")->check(CLI::PositiveNumber);
    sample->add_flag("--no-extremals", o.no_extremals, "Do not inject the extremal functions");
    add_format(sample);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ozaki: " << e.what() << '\n';
        return 1;
    }

    const Format format = o.format == "csv" ? Format::Csv : Format::Json;
    OutputEnvelope env;
    try {
        if (extremal->parsed()) env = cmd_extremal(o);
        else if (coeffs->parsed()) env = cmd_coeffs(o);
        else if (report->parsed()) env = cmd_report(o);
        else if (verify->parsed()) env = cmd_verify(o);
        else if (optimize->parsed()) env = cmd_optimize(o);
        else env = cmd_sample(o);
    } catch (const CLI::ValidationError& e) {
        err << "ozaki: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "ozaki: " << e.what() << '\n';
        env = OutputEnvelope{};
        env.status = Status::Error;
        env.payload["message"] = e.what();
    }
    env.command_echo = join_args(args);

    if (format == Format::Csv && !env.table) {
        err << "ozaki: --format csv applies to sample and optimize only\n";
        return 1;
    }
    out << emit(env, env.status == Status::Error ? Format::Json : format);
    return exit_code(env.status);
}

}  // namespace ozaki::app
