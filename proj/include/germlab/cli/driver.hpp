#pragma once

// Command-line driver. `run_command` takes argv without the program name and
// writes the report to `out`; diagnostics for text mode go to `err`.
//
//   germlab spodzieja --ring "s,t" --map "s^2-t^2, s*(s^2-t^2), t" --extra-point "0,0,1" --json
//   germlab run scenarios/cusp_family.germ --no-timestamp

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "germlab/cli/json.hpp"
#include "germlab/gb.hpp"
#include "germlab/germ.hpp"
#include "germlab/intersect.hpp"
#include "germlab/parse/polynomial_parser.hpp"
#include "germlab/parse/scenario.hpp"

namespace germlab::cli {

inline constexpr const char* kTool = "germlab";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kPrecondition = 2, kResource = 3, kInconsistent = 4 };

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"gb",        "mult",  "degree", "cone",     "image",    "singular",
                                                   "smooth",    "fiber", "index",  "spodzieja", "stoll",   "critical",
                                                   "jacobian",  "mv",    "pullback", "run"};
    return names;
}

// A usage mistake found after argument parsing (missing input, bad option).
class UsageError : public Error {
public:
    using Error::Error;
};

struct Invocation {
    std::string command;
    RingPtr ring;
    RingPtr coring;
    std::optional<PolyMap> map;
    std::optional<Ideal> ideal;
    std::optional<std::vector<Rational>> point;
    std::vector<std::vector<Rational>> extras;
    GenericityConfig config;
    MonomialOrder order = MonomialOrder::deg_rev_lex();
    bool with_multiplicity = false;
};

struct Outcome {
    Json result = Json::object();
    Json witnesses = Json::object();
    std::vector<std::string> warnings;
    int exit_code = kOk;
    std::optional<Json> error;
};

namespace detail {

inline const PolyMap& need_map(const Invocation& inv) {
    if (!inv.map) throw UsageError(inv.command + " needs a map (--map)");
    return *inv.map;
}

inline const Ideal& need_ideal(const Invocation& inv) {
    if (!inv.ideal) throw UsageError(inv.command + " needs an ideal (--ideal)");
    return *inv.ideal;
}

inline const std::vector<Rational>& need_point(const Invocation& inv) {
    if (!inv.point) throw UsageError(inv.command + " needs a point (--point)");
    return *inv.point;
}

// Ideals given to pullback live in the codomain; everywhere else in the source.
inline bool ideal_in_codomain(const std::string& command) { return command == "pullback"; }

inline MonomialOrder parse_order(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex();
    if (name == "degrevlex") return MonomialOrder::deg_rev_lex();
    if (name == "local") return MonomialOrder::local();
    throw UsageError("unknown order '" + name + "' (expected lex, degrevlex or local)");
}

inline std::size_t jacobian_rank_at_origin(const Ideal& ideal) {
    const auto& ring = ideal.ring();
    const std::vector<Rational> origin(ring->arity(), Rational(0));
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : jacobian_matrix(ideal.generators(), ring)) {
        std::vector<Rational> r;
        for (const auto& entry : row) r.push_back(entry.evaluate(origin));
        rows.push_back(std::move(r));
    }
    return matrix_rank(std::move(rows));
}

inline Json config_json(const Invocation& inv) {
    Json c;
    c["seed"] = exact(inv.config.seed);
    c["samples"] = inv.config.samples;
    c["retries"] = inv.config.retries;
    c["max_degree"] = inv.config.limits.max_degree;
    c["max_basis"] = inv.config.limits.max_basis;
    if (inv.command == "gb") c["order"] = inv.order.name();
    if (inv.command == "fiber") c["with_multiplicity"] = inv.with_multiplicity;
    return c;
}

inline Json inputs_json(const Invocation& inv) {
    Json j;
    if (inv.ring) j["ring"] = encode(inv.ring);
    if (inv.map) {
        j["coring"] = encode(inv.map->codomain());
        j["map"] = encode(inv.map->components());
    } else if (inv.coring) {
        j["coring"] = encode(inv.coring);
    }
    if (inv.ideal) j["ideal"] = encode(*inv.ideal);
    if (inv.point) j["point"] = encode(*inv.point);
    if (!inv.extras.empty()) j["extra_points"] = encode(inv.extras);
    return j;
}

inline Json along_json(const AlongReport& r) {
    Json j;
    j["samples"] = encode(r.samples);
    j["multiplicities"] = encode_sizes(r.multiplicities);
    return j;
}

inline Outcome execute(const Invocation& inv) {
    const Limits& limits = inv.config.limits;
    const std::string& cmd = inv.command;
    inv.config.validate();
    Outcome o;
    if (cmd == "gb") {
        const Ideal& ideal = need_ideal(inv);
        const auto basis = ideal.basis(inv.order, limits);
        const ExtNat dim = quotient_dimension(ideal, inv.order, limits);
        o.result["basis"] = encode(basis->basis);
        o.result["quotient_dimension"] = dim.is_finite() ? Json(dim.value()) : Json("infinity");
        o.witnesses["leading"] = encode(basis->leading, ideal.ring());
    } else if (cmd == "mult") {
        const GermReport r = local_multiplicity_report(need_map(inv), limits);
        o.result["local_multiplicity"] = exact(r.values.at(0));
        o.witnesses["standard_basis"] = encode(r.basis);
        o.witnesses["staircase"] = encode(r.staircase, need_map(inv).domain());
        o.warnings = r.warnings;
    } else if (cmd == "degree") {
        const GermReport r = lelong_report(need_ideal(inv), limits);
        o.result["lelong_degree"] = exact(r.values.at(0));
        o.witnesses["tangent_cone"] = encode(r.basis);
        o.warnings = r.warnings;
    } else if (cmd == "cone") {
        const Ideal& ideal = need_ideal(inv);
        require_origin_in_zero_set(ideal);
        const Ideal cone = tangent_cone(ideal, limits);
        const auto [q, d] = cone_hilbert_series(cone, limits);
        Integer degree = 0;
        for (const auto& c : q) degree += c;
        o.result["tangent_cone"] = encode(cone);
        o.result["dimension"] = d;
        o.result["degree"] = exact(degree);
        o.witnesses["hilbert_numerator"] = encode(q);
    } else if (cmd == "image") {
        const PolyMap& f = need_map(inv);
        const Ideal source = inv.ideal ? *inv.ideal : Ideal::zero(f.domain());
        o.result["image_ideal"] = encode(image_ideal(f, source, limits));
        o.witnesses["source_ideal"] = encode(source);
    } else if (cmd == "singular") {
        const Ideal& ideal = need_ideal(inv);
        o.result["singular_locus"] = encode(singular_locus(ideal, limits));
        o.witnesses["krull_dimension"] = krull_dimension(ideal, limits);
    } else if (cmd == "smooth") {
        const Ideal& ideal = need_ideal(inv);
        o.result["smooth"] = is_smooth_at_origin(ideal, limits);
        o.witnesses["local_dimension"] = local_dimension(ideal, limits);
        o.witnesses["jacobian_rank_at_origin"] = jacobian_rank_at_origin(ideal);
    } else if (cmd == "fiber") {
        const PolyMap& f = need_map(inv);
        const auto& y = need_point(inv);
        o.result["count"] = fiber_points_count(f, y, !inv.with_multiplicity, limits);
        o.result["distinct"] = !inv.with_multiplicity;
        const Ideal fiber = fiber_ideal(f, y);
        o.witnesses["fiber_ideal"] = encode(fiber);
        o.witnesses["rational_points"] = encode(rational_points(fiber, limits));
    } else if (cmd == "index") {
        const IndexReport r = intersection_index_report(need_map(inv), inv.config);
        o.result["i0"] = r.value;
        o.result["non_generic"] = r.non_generic;
        o.witnesses["projection"] = r.projection ? encode(*r.projection) : Json(nullptr);
        o.witnesses["candidates"] = encode_sizes(r.candidates);
        o.witnesses["rejected_projections"] = r.rejected_projections;
        o.warnings = r.warnings;
    } else if (cmd == "spodzieja") {
        const FormulaReport r = verify_intersection_formula(need_map(inv), inv.extras, inv.config);
        o.result["i0"] = r.i0;
        o.result["regular_mult"] = r.regular_mult;
        o.result["lelong"] = r.lelong;
        o.result["geometric_mult_lower_bound"] = r.geometric_mult_lower_bound;
        o.result["holds"] = r.holds;
        o.result["naive_product"] = r.naive_product;
        o.witnesses["image_ideal"] = encode(r.image);
        o.witnesses["tangent_cone"] = encode(tangent_cone(r.image, limits));
        o.witnesses["projection"] = r.index.projection ? encode(*r.index.projection) : Json(nullptr);
        o.witnesses["index_candidates"] = encode_sizes(r.index.candidates);
        o.witnesses["regular_samples"] = encode(r.regular);
        o.witnesses["geometric_samples"] = encode(r.geometric, false);
        o.warnings = r.warnings;
    } else if (cmd == "stoll") {
        const StollReport r = stoll_check(need_map(inv), need_point(inv), inv.config);
        o.result["equal"] = r.equal;
        o.result["covering"] = r.covering;
        o.result["fiber_length"] = r.fiber_length;
        o.result["distinct"] = r.distinct;
        o.result["rational_sum"] = r.rational_sum;
        o.result["all_rational"] = r.all_rational;
        o.witnesses["points"] = encode(r.points);
        o.witnesses["point_multiplicities"] = encode_sizes(r.point_multiplicities);
        if (!r.all_rational) o.warnings.push_back("fiber has irrational points; checked in aggregate only");
    } else if (cmd == "critical") {
        const PolyMap& f = need_map(inv);
        o.result["critical_locus"] = encode(critical_locus(f, limits));
        o.witnesses["jacobian_determinant"] = encode(jacobian_determinant(f));
    } else if (cmd == "jacobian") {
        const PolyMap& f = need_map(inv);
        f.require_square();
        o.result["jacobian_determinant"] = encode(jacobian_determinant(f));
        if (inv.ideal) o.result["nonvanishing_on_V"] = jacobian_nonvanishing_on(f, *inv.ideal, limits);
    } else if (cmd == "mv") {
        const AlongReport r = multiplicity_along_V_report(need_map(inv), need_ideal(inv), inv.config);
        o.result["multiplicity_along_V"] = r.value;
        o.witnesses = along_json(r);
        o.warnings = r.warnings;
    } else if (cmd == "pullback") {
        const PullbackReport r = pullback_report(need_map(inv), need_ideal(inv), inv.config);
        o.result["verdict"] = to_string(r.verdict);
        o.result["reason"] = r.reason;
        o.result["mu"] = r.mu;
        o.result["lambda"] = encode_optional(r.lambda);
        o.result["kappa"] = encode_optional(r.kappa);
        o.result["d"] = r.d;
        o.result["chain_holds"] = encode_optional(r.chain_holds);
        o.result["jacobian_nonvanishing"] = r.jacobian_nonvanishing;
        o.result["v_smooth"] = r.v_smooth;
        o.result["pullback_equal"] = r.pullback_equal;
        o.result["w_smooth"] = r.w_smooth;
        o.witnesses["V"] = encode(r.v);
        if (r.normalized) {
            Json n;
            n["map"] = encode(r.normalized->map.components());
            n["subspace"] = encode(r.normalized->subspace);
            n["change"] = encode(r.normalized->change.components());
            o.witnesses["normalization"] = std::move(n);
        } else {
            o.witnesses["normalization"] = nullptr;
        }
        o.witnesses["lambda_samples"] = r.lambda_samples ? encode(*r.lambda_samples) : Json(nullptr);
        o.witnesses["kappa_samples"] = r.kappa_samples ? along_json(*r.kappa_samples) : Json(nullptr);
        o.warnings = r.warnings;
        if (r.lambda_samples) {
            o.warnings.insert(o.warnings.end(), r.lambda_samples->warnings.begin(), r.lambda_samples->warnings.end());
        }
        if (r.kappa_samples) {
            o.warnings.insert(o.warnings.end(), r.kappa_samples->warnings.begin(), r.kappa_samples->warnings.end());
        }
        if (r.verdict == Verdict::HypothesisFailed) o.exit_code = kPrecondition;
        if (r.verdict == Verdict::Inconsistent) o.exit_code = kInconsistent;
    } else {
        throw UsageError("unknown command '" + cmd + "'");
    }
    return o;
}

inline Json error_json(const char* code, const std::string& message) {
    Json e;
    e["code"] = code;
    e["message"] = message;
    return e;
}

// Runs `body`, turning library errors into a structured error and exit code.
template <class Body>
Outcome guarded(Body&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        Outcome o;
        Json err = error_json("parse_error", e.message());
        err["line"] = e.line();
        err["column"] = e.column();
        o.error = std::move(err);
        o.exit_code = kUsage;
        return o;
    } catch (const UsageError& e) {
        Outcome o;
        o.error = error_json("usage_error", e.what());
        o.exit_code = kUsage;
        return o;
    } catch (const PreconditionError& e) {
        Outcome o;
        o.error = error_json("precondition_failed", e.what());
        o.exit_code = kPrecondition;
        return o;
    } catch (const ResourceError& e) {
        Outcome o;
        o.error = error_json("resource_exhausted", e.what());
        o.exit_code = kResource;
        return o;
    }
}

// Parses one inline flag value, tagging parse errors with the flag name.
template <class Fn>
auto parse_flag(const std::string& flag, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), flag + ": " + e.message());
    }
}

inline std::string timestamp_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

inline std::string inline_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) s += ", ";
            s += inline_text(j[i]);
        }
        return s + "]";
    }
    return j.dump();
}

inline void render_text(std::ostream& os, const Json& object, std::size_t indent) {
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : object.items()) {
        const bool has_objects =
            value.is_array() && std::any_of(value.begin(), value.end(), [](const Json& e) { return e.is_object(); });
        if (value.is_object() && !value.empty()) {
            os << pad << key << ":\n";
            render_text(os, value, indent + 2);
        } else if (has_objects) {
            os << pad << key << ":\n";
            for (const auto& element : value) {
                std::ostringstream item;
                if (element.is_object()) {
                    render_text(item, element, indent + 4);
                } else {
                    item << std::string(indent + 4, ' ') << inline_text(element) << '\n';
                }
                std::string text = item.str();
                text.replace(0, indent + 4, std::string(indent + 2, ' ') + "- ");
                os << text;
            }
        } else if (value.is_object()) {
            os << pad << key << ": {}\n";
        } else {
            os << pad << key << ": " << inline_text(value) << '\n';
        }
    }
}

inline int merge_exit(int a, int b) { return std::max(a, b); }

}  // namespace detail

// Assembles the report document for one invocation.
inline Json report_document(const std::string& command, const Json& inputs, const Json& config, const Outcome& o,
                            bool with_timestamp) {
    Json doc;
    doc["tool"] = kTool;
    doc["version"] = kVersion;
    doc["command"] = command;
    if (with_timestamp) doc["timestamp"] = detail::timestamp_now();
    doc["inputs"] = inputs;
    doc["config"] = config;
    if (o.error) {
        doc["error"] = *o.error;
    } else {
        doc["result"] = o.result;
        doc["witnesses"] = o.witnesses;
    }
    doc["warnings"] = encode(o.warnings);
    doc["exit_code"] = o.exit_code;
    return doc;
}

enum class Format { Text, Json };

inline void emit_report(const Json& doc, Format format, std::ostream& out) {
    if (format == Format::Json) {
        out << doc.dump(2) << '\n';
    } else {
        detail::render_text(out, doc, 0);
    }
}

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::size_t samples = GenericityConfig{}.samples;
    std::size_t retries = GenericityConfig{}.retries;
    int max_degree = Limits{}.max_degree;
    std::size_t max_basis = Limits{}.max_basis;
    std::string order = "degrevlex";
    bool with_multiplicity = false;

    GenericityConfig config() const {
        GenericityConfig c;
        c.seed = seed;
        c.samples = samples;
        c.retries = retries;
        c.limits.max_degree = max_degree;
        c.limits.max_basis = max_basis;
        return c;
    }
};

namespace detail {

inline bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw UsageError("option " + key + " expects true or false, got '" + v + "'");
}

template <class T>
T parse_unsigned(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const unsigned long long n = std::stoull(v, &used);
        if (used != v.size() || v.front() == '-') throw std::invalid_argument(v);
        if (n > static_cast<unsigned long long>(std::numeric_limits<T>::max())) throw std::out_of_range(v);
        return static_cast<T>(n);
    } catch (const std::logic_error&) {
        throw UsageError("option " + key + " expects a non-negative integer, got '" + v + "'");
    }
}

// One scenario task as an invocation over the scenario's bindings.
inline Invocation task_invocation(const parse::Scenario& sc, const parse::ScenarioTask& task, GlobalOptions opts) {
    Invocation inv;
    inv.command = task.kind;
    if (task.kind == "run" || std::find(command_names().begin(), command_names().end(), task.kind) == command_names().end()) {
        throw UsageError("unknown task kind '" + task.kind + "'");
    }
    inv.ring = sc.ring;
    inv.coring = sc.coring;
    for (const auto& [key, value] : task.options) {
        if (key == "seed") {
            opts.seed = parse_unsigned<std::uint64_t>(key, value);
        } else if (key == "samples") {
            opts.samples = parse_unsigned<std::size_t>(key, value);
        } else if (key == "retries") {
            opts.retries = parse_unsigned<std::size_t>(key, value);
        } else if (key == "max_degree") {
            opts.max_degree = parse_unsigned<int>(key, value);
        } else if (key == "max_basis") {
            opts.max_basis = parse_unsigned<std::size_t>(key, value);
        } else if (key == "order") {
            opts.order = value;
        } else if (key == "with_multiplicity") {
            opts.with_multiplicity = parse_bool(key, value);
        } else if (key == "extra") {
            inv.extras.push_back(sc.points.at(value));
        } else {
            throw UsageError("unknown task option '" + key + "'");
        }
    }
    inv.config = opts.config();
    inv.order = parse_order(opts.order);
    inv.with_multiplicity = opts.with_multiplicity;
    for (const auto& name : task.args) {
        auto once = [&](bool taken) {
            if (taken) throw UsageError("task " + task.kind + " has more than one argument of the kind of '" + name + "'");
        };
        if (auto m = sc.maps.find(name); m != sc.maps.end()) {
            once(inv.map.has_value());
            inv.map = m->second;
        } else if (auto i = sc.ideals.find(name); i != sc.ideals.end()) {
            once(inv.ideal.has_value());
            inv.ideal = i->second;
        } else if (auto c = sc.coideals.find(name); c != sc.coideals.end()) {
            once(inv.ideal.has_value());
            inv.ideal = c->second;
        } else {
            once(inv.point.has_value());
            inv.point = sc.points.at(name);
        }
    }
    return inv;
}

inline Json run_scenario(const std::string& path, const GlobalOptions& opts, int& exit_code) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read scenario file '" + path + "'");
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const parse::Scenario sc = parse::parse_scenario(text);
    Json tasks = Json::array();
    for (const auto& task : sc.tasks) {
        Invocation inv;
        inv.command = task.kind;
        inv.config = opts.config();
        Outcome o = guarded([&] {
            inv = task_invocation(sc, task, opts);
            return execute(inv);
        });
        Json entry;
        entry["line"] = task.line;
        entry["task"] = task.kind;
        entry["arguments"] = encode(task.args);
        Json doc = report_document(task.kind, inputs_json(inv), config_json(inv), o, false);
        for (const auto& key : {"inputs", "config", "error", "result", "witnesses", "warnings", "exit_code"}) {
            if (doc.contains(key)) entry[key] = doc[key];
        }
        exit_code = merge_exit(exit_code, o.exit_code);
        tasks.push_back(std::move(entry));
    }
    Json result;
    result["tasks"] = std::move(tasks);
    return result;
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const bool json_requested = std::find(args.begin(), args.end(), "--json") != args.end();
    CLI::App app{"Local intersection invariants of polynomial map germs, in exact arithmetic.", kTool};
    app.set_version_flag("--version", kVersion);

    GlobalOptions opts;
    std::string command;
    std::string scenario_path;
    std::optional<std::string> ring_text, coring_text, map_text, ideal_text, point_text;
    std::vector<std::string> extra_texts;
    bool json = false;
    bool no_timestamp = false;

    app.add_option("command", command, "gb | mult | degree | cone | image | singular | smooth | fiber | index | "
                                       "spodzieja | stoll | critical | jacobian | mv | pullback | run")
        ->required()
        ->check(CLI::IsMember(command_names()));
    app.add_option("scenario", scenario_path, "scenario file (run only)");
    app.add_option("--ring", ring_text, "source variables, e.g. \"x,y,t\"");
    app.add_option("--coring", coring_text, "codomain variables (default w1..wn)");
    app.add_option("--map", map_text, "map components, comma separated");
    app.add_option("--ideal", ideal_text, "ideal generators, comma separated");
    app.add_option("--point", point_text, "rational point, comma separated");
    app.add_option("--extra-point", extra_texts, "image point added to the geometric samples (repeatable)")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    app.add_option("--seed", opts.seed, "sampling seed (default 0, or GERMLAB_SEED)")->envname("GERMLAB_SEED");
    app.add_option("--samples", opts.samples, "generic samples per estimate");
    app.add_option("--retries", opts.retries, "resampling rounds");
    app.add_option("--max-degree", opts.max_degree, "degree guard for basis computations");
    app.add_option("--max-basis", opts.max_basis, "basis size guard");
    app.add_option("--order", opts.order, "monomial order for gb: lex, degrevlex or local");
    app.add_flag("--with-multiplicity", opts.with_multiplicity, "fiber: count points with multiplicity");
    app.add_flag("--json", json, "emit JSON");
    app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp field");

    auto usage_failure = [&](const std::string& message) {
        if (json_requested) {
            Outcome o;
            o.error = detail::error_json("usage_error", message);
            o.exit_code = kUsage;
            emit_report(report_document(command, Json::object(), Json::object(), o, false), Format::Json, out);
        } else {
            err << "error: " << message << "\nRun with --help for usage.\n";
        }
        return static_cast<int>(kUsage);
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        return usage_failure(e.what());
    }

    const Format format = json ? Format::Json : Format::Text;
    Invocation inv;
    inv.command = command;
    inv.config = opts.config();
    int exit_code = kOk;
    Json inputs = Json::object();

    Outcome outcome = detail::guarded([&]() -> Outcome {
        inv.order = detail::parse_order(opts.order);
        inv.with_multiplicity = opts.with_multiplicity;
        if (command == "run") {
            if (scenario_path.empty()) throw UsageError("run needs a scenario file");
            inputs["scenario"] = scenario_path;
            Outcome o;
            o.result = detail::run_scenario(scenario_path, opts, o.exit_code);
            return o;
        }
        if (!scenario_path.empty()) throw UsageError("unexpected argument '" + scenario_path + "'");
        if (!ring_text) throw UsageError(command + " needs --ring");
        inv.ring = detail::parse_flag("--ring", [&] { return parse::parse_ring(*ring_text); });
        if (coring_text) inv.coring = detail::parse_flag("--coring", [&] { return parse::parse_ring(*coring_text); });
        if (map_text) {
            auto comps = detail::parse_flag("--map", [&] { return parse::parse_polynomial_list(*map_text, inv.ring); });
            if (comps.empty()) throw UsageError("--map has no components");
            if (inv.coring && inv.coring->arity() != comps.size()) {
                throw UsageError("--map has " + std::to_string(comps.size()) + " components but --coring has " +
                                 std::to_string(inv.coring->arity()) + " variables");
            }
            inv.map = PolyMap(inv.ring, std::move(comps), inv.coring);
        }
        if (ideal_text) {
            RingPtr ring = inv.ring;
            if (detail::ideal_in_codomain(command)) {
                if (!inv.map) throw UsageError(command + " needs --map before its codomain ideal can be read");
                ring = inv.map->codomain();
            }
            inv.ideal = Ideal(ring, detail::parse_flag("--ideal", [&] { return parse::parse_polynomial_list(*ideal_text, ring); }));
        }
        if (point_text) inv.point = detail::parse_flag("--point", [&] { return parse::parse_point(*point_text); });
        for (const auto& e : extra_texts) {
            inv.extras.push_back(detail::parse_flag("--extra-point", [&] { return parse::parse_point(e); }));
        }
        inputs = detail::inputs_json(inv);
        return detail::execute(inv);
    });
    exit_code = outcome.exit_code;

    Json config = detail::config_json(inv);
    emit_report(report_document(command, inputs, config, outcome, !no_timestamp), format, out);
    if (outcome.error && format == Format::Text) {
        err << "error (" << (*outcome.error)["code"].get<std::string>()
            << "): " << (*outcome.error)["message"].get<std::string>() << '\n';
    }
    return exit_code;
}

}  // namespace germlab::cli
