#include "bigsurf/cli.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace bigsurf::cli {

using bigsurf::decode;
using bigsurf::encode;

Command command_from_string(const std::string& s) {
    if (s == "classify") return Command::Classify;
    if (s == "check") return Command::Check;
    if (s == "roots") return Command::Roots;
    if (s == "zariski") return Command::Zariski;
    if (s == "enumerate") return Command::Enumerate;
    if (s == "sweep") return Command::Sweep;
    if (s == "witness") return Command::Witness;
    throw DomainError("unknown command '" + s + "'");
}

std::string to_string(Command c) {
    switch (c) {
        case Command::Classify: return "classify";
        case Command::Check: return "check";
        case Command::Roots: return "roots";
        case Command::Zariski: return "zariski";
        case Command::Enumerate: return "enumerate";
        case Command::Sweep: return "sweep";
        case Command::Witness: return "witness";
    }
    return "?";
}

OutputFormat format_from_string(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "dot") return OutputFormat::Dot;
    if (s == "text") return OutputFormat::Text;
    throw DomainError("unknown output format '" + s + "' (expected json, dot or text)");
}

Input parse_input(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("$: expected an object");
    if (!j.contains("model") || !j.at("model").is_string())
        throw DomainError("$.model: missing or non-string model discriminator");
    const std::string model = j.at("model").get<std::string>();
    if (model == "generic" || model == "line_conic" || model == "three_lines")
        return decode_as<PointConfiguration>(j);
    if (model == "hirzebruch_family") return decode_as<FamilyParams>(j);
    if (model == "witness") return decode_as<WitnessParams>(j);
    throw DomainError("$.model: unknown model '" + model + "'");
}

RunConfig parse_config(Command command, std::string_view text, OutputFormat format,
                       std::optional<SweepBounds> sweep) {
    RunConfig config;
    config.command = command;
    config.format = format;
    if (command == Command::Sweep) {
        if (!text.empty()) throw DomainError("sweep takes no input document");
        config.sweep = sweep.value_or(SweepBounds{});
        const auto& b = *config.sweep;
        if (b.max_a < 0 || b.max_b < 0 || b.max_ai < 0) throw DomainError("sweep bounds must be >= 0");
        return config;
    }
    if (sweep) throw DomainError("sweep bounds are only accepted by the sweep command");
    if (text.empty()) throw DomainError(to_string(command) + " requires an input document (--input or --json)");
    config.input = parse_input(text);

    const auto* points = std::get_if<PointConfiguration>(&config.input);
    switch (command) {
        case Command::Classify:
        case Command::Roots:
            if (!points) throw DomainError(to_string(command) + " expects a point configuration");
            break;
        case Command::Check:
            if (!points || std::holds_alternative<Generic>(*points))
                throw DomainError("check expects a line_conic or three_lines configuration");
            break;
        case Command::Enumerate:
            if (!points || !std::holds_alternative<Generic>(*points))
                throw DomainError("enumerate expects a generic configuration");
            break;
        case Command::Zariski:
            if (!std::holds_alternative<FamilyParams>(config.input))
                throw DomainError("zariski expects a hirzebruch_family input");
            break;
        case Command::Witness:
            if (!std::holds_alternative<WitnessParams>(config.input))
                throw DomainError("witness expects a witness input");
            break;
        case Command::Sweep: break;
    }
    return config;
}

// --- sweep -------------------------------------------------------------------------

SweepReport run_sweep(const SweepBounds& bounds, unsigned threads) {
    std::vector<PointConfiguration> configs;
    std::vector<std::vector<std::size_t>> groups;  // same counts, differing flags only
    for (int a = 0; a <= bounds.max_a; ++a)
        for (int b = 0; b <= bounds.max_b; ++b) {
            groups.emplace_back();
            for (int both = 0; both <= 2; ++both) {
                groups.back().push_back(configs.size());
                configs.push_back(LineConic{a, b, both});
            }
        }
    for (int a1 = 0; a1 <= bounds.max_ai; ++a1)
        for (int a2 = 0; a2 <= bounds.max_ai; ++a2)
            for (int a3 = 0; a3 <= bounds.max_ai; ++a3) {
                groups.emplace_back();
                for (int mask = 0; mask < 8; ++mask) {
                    groups.back().push_back(configs.size());
                    configs.push_back(ThreeLines{{a1, a2, a3}, {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0}});
                }
            }

    struct Outcome {
        bool big = false;
        bool ok = false;
        std::string error;
    };
    std::vector<Outcome> outcomes(configs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            try {
                const auto report = cross_check(configs[i]);
                outcomes[i].big = report.verdict.big;
                outcomes[i].ok = report.ok() && report.verdict.lattice_confirmed;
            } catch (const std::exception& e) {
                outcomes[i].error = e.what();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SweepReport report;
    report.bounds = bounds;
    report.configurations = configs.size();
    constexpr std::size_t kMaxListed = 20;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        if (outcomes[i].big) ++report.big;
        if (!outcomes[i].ok) {
            ++report.disagreements;
            if (report.failures.size() < kMaxListed)
                report.failures.push_back(describe(configs[i]) +
                                          (outcomes[i].error.empty() ? "" : ": " + outcomes[i].error));
        }
    }
    for (const auto& g : groups)
        for (std::size_t i : g)
            if (outcomes[i].big != outcomes[g.front()].big) {
                ++report.flag_dependent;
                break;
            }
    return report;
}

Json encode(const SweepReport& r) {
    return Json{{"bounds", Json{{"max_a", r.bounds.max_a}, {"max_b", r.bounds.max_b}, {"max_ai", r.bounds.max_ai}}},
                {"configurations", r.configurations},
                {"big", r.big},
                {"disagreements", r.disagreements},
                {"flag_dependent", r.flag_dependent},
                {"failures", r.failures}};
}

void decode(const Json& j, SweepReport& out) {
    try {
        const auto& b = j.at("bounds");
        out.bounds = {b.at("max_a").get<int>(), b.at("max_b").get<int>(), b.at("max_ai").get<int>()};
        out.configurations = j.at("configurations").get<std::size_t>();
        out.big = j.at("big").get<std::size_t>();
        out.disagreements = j.at("disagreements").get<std::size_t>();
        out.flag_dependent = j.at("flag_dependent").get<std::size_t>();
        out.failures = j.at("failures").get<std::vector<std::string>>();
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed sweep report: ") + e.what());
    }
}

// --- dispatch ------------------------------------------------------------------------

namespace {

struct Emitted {
    Json json;
    std::string text;
    std::string dot;
    bool invariant_ok = true;
    std::string invariant_message;
};

std::string opt_str(const std::optional<Rational>& q) { return q ? q->get_str() : "-"; }

Emitted do_classify(const PointConfiguration& config) {
    Emitted e;
    const BignessVerdict verdict = classify_anticanonical(config);
    const PicardLattice lattice = model_lattice(config);
    std::optional<RootSystemReport> roots;
    if (verdict.big) {
        if (const auto* g = std::get_if<Generic>(&config))
            roots = del_pezzo_root_system(g->r);
        else
            roots = config_root_system(config);
    }
    e.json = Json{{"big", verdict.big},
                  {"case", to_string(verdict.which)},
                  {"inequality", verdict.inequality_lhs ? encode(*verdict.inequality_lhs) : Json(nullptr)},
                  {"v", verdict.v ? encode(*verdict.v) : Json(nullptr)},
                  {"v_squared", verdict.v_squared ? encode(*verdict.v_squared) : Json(nullptr)},
                  {"lattice",
                   Json{{"rank", lattice.rank()}, {"labels", lattice.labels()}, {"confirmed", verdict.lattice_confirmed}}},
                  {"type", roots ? Json(roots->type()) : Json(nullptr)},
                  {"root_count", roots ? Json(roots->roots.size()) : Json(nullptr)},
                  {"effective", verdict.effective},
                  {"input", encode(config)}};
    std::ostringstream t;
    t << describe(config) << "\n"
      << "big: " << (verdict.big ? "yes" : "no") << "\n"
      << "case: " << to_string(verdict.which) << "\n"
      << "inequality: " << opt_str(verdict.inequality_lhs) << "\n"
      << "v: " << (verdict.v ? lattice.format(*verdict.v) : "-") << "\n"
      << "v^2: " << opt_str(verdict.v_squared) << "\n"
      << "lattice confirmed: " << (verdict.lattice_confirmed ? "yes" : "no") << "\n"
      << "type: " << (roots ? roots->type() : "-") << "\n";
    e.text = t.str();
    e.invariant_ok = verdict.lattice_confirmed;
    e.invariant_message = "inequality and lattice verdicts disagree for " + describe(config);
    return e;
}

Emitted do_check(const PointConfiguration& config) {
    Emitted e;
    const CrossCheckReport report = cross_check(config);
    e.json = encode(report);
    e.json["input"] = encode(config);
    std::ostringstream t;
    const auto& in = report.complement_inertia;
    t << describe(config) << "\n"
      << "inequality verdict: " << (report.verdict.big ? "big" : "not big") << "\n"
      << "lattice verdict: " << (report.lattice_big ? "big" : "not big") << " (inertia +" << in.positive << " -"
      << in.negative << " 0:" << in.zero << ")\n"
      << "agree: " << (report.agree ? "yes" : "no") << "\n"
      << "v orthogonal to components: " << (report.v_orthogonal ? "yes" : "no") << "\n"
      << "sign of v^2 matches: " << (report.v_sign_matches ? "yes" : "no") << "\n";
    e.text = t.str();
    e.invariant_ok = report.ok();
    e.invariant_message = "cross-check failed for " + describe(config);
    return e;
}

Emitted do_roots(const PointConfiguration& config) {
    Emitted e;
    RootSystemReport report;
    std::optional<std::vector<CartanType>> predicted;
    if (const auto* g = std::get_if<Generic>(&config)) {
        report = del_pezzo_root_system(g->r);
    } else {
        report = config_root_system(config);
        predicted = predicted_type(config);
    }
    e.json = encode(report);
    if (!std::holds_alternative<Generic>(config)) {
        e.json["predicted"] = predicted ? Json(type_string(*predicted)) : Json("outside table");
        if (predicted) e.json["matches_prediction"] = *predicted == report.components;
    }
    e.json["input"] = encode(config);
    std::ostringstream t;
    t << describe(config) << "\n"
      << "type: " << report.type() << "\n"
      << "roots: " << report.roots.size() << "\n"
      << "simple roots:";
    for (const auto& l : report.labels) t << " " << l;
    t << "\n";
    if (predicted) t << "predicted: " << type_string(*predicted) << "\n";
    e.text = t.str();
    e.dot = coxeter_dot(report);
    e.invariant_ok = !predicted || *predicted == report.components;
    e.invariant_message = "root system type differs from the tabulated type for " + describe(config);
    return e;
}

Emitted do_zariski(const FamilyParams& params) {
    Emitted e;
    const ZariskiReport report = zariski_decompose(params);
    e.json = encode(report);
    const PicardLattice lattice = family_lattice(params);
    std::ostringstream t;
    t << "P = " << lattice.format(report.p) << "\n"
      << "N = " << lattice.format(report.n) << "\n"
      << "P^2 = " << report.p_squared.get_str() << "\n"
      << "certificates: " << (report.checks.all() ? "all hold" : "FAILED") << "\n"
      << "section coefficient in N: " << report.lc_coefficient.get_str() << "\n"
      << "log canonical: " << (report.log_canonical ? "yes" : "no") << "\n";
    e.text = t.str();
    e.invariant_ok = report.checks.all() && !report.log_canonical;
    e.invariant_message = "Zariski certificates failed";
    return e;
}

Emitted do_enumerate(const Generic& g) {
    Emitted e;
    const NegativeClassTable table = negative_classes(g.r);
    e.json = encode(table);
    const PicardLattice lattice = blowup_p2(g.r);
    std::ostringstream t;
    t << "r = " << g.r << "\n(-1)-classes: " << table.minus_one_classes.size() << "\n";
    for (const auto& c : table.minus_one_classes) t << "  " << lattice.format(c) << "\n";
    t << "(-2)-roots: " << table.minus_two_roots.size() << "\n";
    e.text = t.str();
    return e;
}

Emitted do_sweep(const SweepBounds& bounds) {
    Emitted e;
    const SweepReport report = run_sweep(bounds);
    e.json = encode(report);
    std::ostringstream t;
    t << "configurations: " << report.configurations << "\n"
      << "big: " << report.big << "\n"
      << "disagreements: " << report.disagreements << "\n"
      << "flag-dependent verdicts: " << report.flag_dependent << "\n";
    for (const auto& f : report.failures) t << "  " << f << "\n";
    e.text = t.str();
    e.invariant_ok = report.disagreements == 0 && report.flag_dependent == 0;
    e.invariant_message = "sweep found disagreements";
    return e;
}

Emitted do_witness(const WitnessParams& params) {
    Emitted e;
    const WitnessReport report = verify_witness(params);
    e.json = encode(report);
    // Formatting only needs the labels.
    const std::size_t rank = report.labels.size();
    const PicardLattice view(IntMatrix::identity(rank), DivisorClass::zero(rank), report.labels, PlaneBlowup{0});
    auto fmt = [&](const DivisorClass& d) { return view.format(d); };
    std::ostringstream t;
    t << to_string(params.example) << "\n"
      << "lhs = " << fmt(report.lhs) << "\n"
      << "big part = " << fmt(report.big_part) << " (square " << report.big_part_square.get_str() << ")\n"
      << "effective part = " << fmt(report.effective_part) << "\n"
      << "residual = " << fmt(report.residual) << "\n"
      << "identity holds: " << (report.identity_holds ? "yes" : "no") << "\n";
    e.text = t.str();
    return e;
}

}  // namespace

RunResult run(const RunConfig& config) {
    RunResult result;
    try {
        Emitted e;
        switch (config.command) {
            case Command::Classify: e = do_classify(std::get<PointConfiguration>(config.input)); break;
            case Command::Check: e = do_check(std::get<PointConfiguration>(config.input)); break;
            case Command::Roots: e = do_roots(std::get<PointConfiguration>(config.input)); break;
            case Command::Zariski: e = do_zariski(std::get<FamilyParams>(config.input)); break;
            case Command::Enumerate:
                e = do_enumerate(std::get<Generic>(std::get<PointConfiguration>(config.input)));
                break;
            case Command::Sweep: e = do_sweep(config.sweep.value_or(SweepBounds{})); break;
            case Command::Witness: e = do_witness(std::get<WitnessParams>(config.input)); break;
        }
        switch (config.format) {
            case OutputFormat::Json: result.output = e.json.dump() + "\n"; break;
            case OutputFormat::Text: result.output = e.text; break;
            case OutputFormat::Dot:
                if (config.command != Command::Roots)
                    throw DomainError("dot output is only available for the roots command");
                result.output = e.dot;
                break;
        }
        if (!e.invariant_ok) {
            result.exit_code = 2;
            result.error = e.invariant_message;
        }
    } catch (const DomainError& ex) {
        result = {1, "", ex.what()};
    } catch (const InvariantError& ex) {
        result = {2, "", ex.what()};
    } catch (const std::bad_variant_access&) {
        result = {1, "", "input kind does not match the command"};
    } catch (const std::exception& ex) {
        result = {2, "", std::string("internal error: ") + ex.what()};
    }
    return result;
}

}  // namespace bigsurf::cli
