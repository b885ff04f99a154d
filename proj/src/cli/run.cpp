#include "dwind/cli/run.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwind/bounds.hpp"
#include "dwind/cli/cache.hpp"
#include "dwind/cli/format.hpp"
#include "dwind/cli/parse.hpp"
#include "dwind/errors.hpp"
#include "dwind/semigroup.hpp"
#include "dwind/surgery.hpp"

namespace dwind::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kNiWu = "d(S^3_n(K), t_i) = -2 max{V_i, V_{n-i}} + (n-2i)^2/(4n) - 1/4";
constexpr const char* kSemigroupV = "V_i(T(p,q)) = |Gamma_{p,q} cap [0, g - i)|";
constexpr const char* kHomologyV = "V_s = min{k : H_{-2k}(A_s) -> H_{-2k}(C) is nonzero}";
constexpr const char* kNcf = "[a_1, ..., a_k]^- = a_1 - 1/[a_2, ..., a_k]^-";
constexpr const char* kEuler = "e(M(e0; r_1, ..., r_k)) = e0 + sum r_j";
constexpr const char* kKnEuler = "e = 2(2/(4n+3) - 1/(2n+1))";

std::string idx(const std::string& base, std::int64_t i) { return base + "_" + std::to_string(i); }

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ValidationError("'" + item + "' is not an integer");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw ValidationError("'" + item + "' is not an integer");
        out.push_back(v);
    }
    if (out.empty()) throw ValidationError("empty coefficient list");
    return out;
}

EssentialInput load_dtable(const std::string& path, int w) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open d-table file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("d-table file " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("w") || !doc.contains("d") || !doc["w"].is_number_integer() ||
        !doc["d"].is_object())
        throw ValidationError("d-table file must be an object {\"w\": int, \"d\": {\"0\": \"num/den\", ...}}");
    const int file_w = doc["w"].get<int>();
    if (file_w != w)
        throw ValidationError("--w " + std::to_string(w) + " does not match w = " + std::to_string(file_w) +
                              " in the d-table file");
    if (w <= 0 || w % 2 != 0) throw ValidationError("winding class multiplier w must be positive and even");
    const std::size_t order = static_cast<std::size_t>(w) * static_cast<std::size_t>(w);
    std::vector<std::optional<Rational>> slots(order);
    for (const auto& [key, value] : doc["d"].items()) {
        std::size_t used = 0;
        long k = -1;
        try {
            k = std::stol(key, &used);
        } catch (const std::exception&) {
        }
        if (used != key.size() || k < 0 || static_cast<std::size_t>(k) >= order)
            throw ValidationError("d-table key '" + key + "' is not in [0," + std::to_string(order) + ")");
        if (!value.is_string()) throw ValidationError("d-table value for key " + key + " must be a \"num/den\" string");
        slots[static_cast<std::size_t>(k)] = Rational::parse(value.get<std::string>());
    }
    std::vector<Rational> table;
    table.reserve(order);
    for (std::size_t k = 0; k < order; ++k) {
        if (!slots[k]) throw ValidationError("d-table is missing spin^c index " + std::to_string(k));
        table.push_back(*slots[k]);
    }
    return EssentialInput(w, std::move(table));
}

bool wants_json(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format=json") return true;
        if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json") return true;
    }
    return false;
}

int report_error(std::ostream& out, std::ostream& err, bool as_json, const std::string& kind,
                 const std::string& message, int code) {
    if (as_json)
        out << error_json(kind, message, code).dump(2) << "\n";
    else
        err << "error: " << message << "\n";
    return code;
}

// A mirrored expression such as "-T(2,3)" would otherwise be read as a short option.
std::vector<std::string> protect_mirrors(std::vector<std::string> args) {
    for (auto& a : args)
        if (a.size() > 1 && a[0] == '-' && (a[1] == 'T' || a[1] == 'U' || a[1] == ' ')) a.insert(0, " ");
    return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    const bool json_errors = wants_json(raw_args);

    std::string format_name = "table";
    std::string cache_path;
    bool no_cache = false;

    CLI::App app{"Correction terms of surgeries on torus-knot sums and the winding-number bounds built from them",
                 "dwind"};
    app.set_version_flag("--version", std::string(DWIND_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--cache", cache_path, "Cache file (default: $" + std::string(kCacheEnv) + ")");
    app.add_flag("--no-cache", no_cache, "Do not read or write any cache file");

    std::function<CommandResult(const VSource&)> action;

    std::string expr_text;
    int n = 0;
    std::optional<int> i_opt;
    bool all = false;
    int w = 0;
    std::string dtable;
    bool cross_check = false;
    std::string ncf_text;

    auto* vseq = app.add_subcommand("vseq", "V-sequence V_0, V_1, ... of a knot expression");
    vseq->add_option("expr", expr_text, "Knot expression, e.g. \"T(2,3) # -T(2,5)\"")->required();
    vseq->callback([&] {
        action = [&](const VSource& src) {
            const auto k = parse_knot_expr(expr_text);
            const auto v = src.sequence(k);
            CommandResult r;
            r.command = "vseq";
            r.inputs.emplace_back("K", k.str());
            r.value = v.at(0);
            const char* anchor = k.is_positive_torus_knot() ? kSemigroupV : kHomologyV;
            for (std::size_t s = 0; s < v.size(); ++s)
                r.trail.push_back({idx("V", static_cast<std::int64_t>(s)), v.values()[s], anchor});
            r.extra["v_sequence"] = v.values();
            return r;
        };
    });

    auto* dinv = app.add_subcommand("dinv", "Correction terms of positive integer surgery");
    dinv->add_option("expr", expr_text, "Knot expression")->required();
    dinv->add_option("--n", n, "Surgery coefficient n >= 1")->required();
    auto* i_flag = dinv->add_option("--i", i_opt, "Spin^c index 0 <= i < n");
    dinv->add_flag("--all", all, "Every spin^c structure (default)")->excludes(i_flag);
    dinv->callback([&] {
        action = [&](const VSource& src) {
            const auto k = parse_knot_expr(expr_text);
            if (n < 1) throw ValidationError("surgery coefficient must be positive, got " + std::to_string(n));
            const auto v = src.sequence(k);
            CommandResult r;
            r.command = "dinv";
            r.inputs.emplace_back("K", k.str());
            r.inputs.emplace_back("n", std::to_string(n));
            if (i_opt) {
                const int i = *i_opt;
                r.inputs.emplace_back("i", std::to_string(i));
                r.value = d_positive_surgery(v, n, i);
                r.trail.push_back({idx("V", i), v.at(i), kSemigroupV});
                r.trail.push_back({idx("V", n - i), v.at(n - i), kSemigroupV});
                r.trail.push_back({"d(S^3_" + std::to_string(n) + "(K), t_" + std::to_string(i) + ")", r.value, kNiWu});
                if (!k.is_positive_torus_knot()) r.trail[0].anchor = r.trail[1].anchor = kHomologyV;
            } else {
                const auto table = correction_table(v, n);
                json entries = json::array();
                for (int i = 0; i < n; ++i) {
                    r.trail.push_back(
                        {"d(S^3_" + std::to_string(n) + "(K), t_" + std::to_string(i) + ")", table.at(i), kNiWu});
                    entries.push_back(table.at(i).str());
                }
                r.value = table.at(0);
                r.extra["table"] = entries;
            }
            return r;
        };
    });

    auto* bound = app.add_subcommand("bound", "Lower bounds");
    bound->require_subcommand(1);
    bound->fallthrough();
    auto* winding = bound->add_subcommand("winding", "Winding number bound through the +1-surgery S^3_0(J)");
    winding->add_option("expr", expr_text, "The knot J")->required();
    winding->callback([&] {
        action = [&](const VSource& src) {
            return CommandResult::from_report("bound winding",
                                              winding_bound_via_zero_surgery(parse_knot_expr(expr_text), src));
        };
    });
    auto* shake = bound->add_subcommand("shake", "0-shake genus bound");
    shake->add_option("expr", expr_text, "The knot K")->required();
    shake->callback([&] {
        action = [&](const VSource& src) {
            return CommandResult::from_report("bound shake", shake_bound(parse_knot_expr(expr_text), src));
        };
    });
    auto* essential = bound->add_subcommand("essential", "Winding number bound for a knot in the class w[S^1]");
    essential->add_option("--w", w, "Even w > 0")->required();
    essential->add_option("--dtable", dtable, "JSON file {\"w\": int, \"d\": {\"0\": \"num/den\", ...}}")->required();
    essential->callback([&] {
        action = [&](const VSource&) {
            return CommandResult::from_report("bound essential", essential_report(load_dtable(dtable, w)));
        };
    });

    auto* examples = app.add_subcommand("examples", "Worked examples");
    examples->require_subcommand(1);
    examples->fallthrough();
    auto* kn = examples->add_subcommand("kn", "Bound chain for the family K_n");
    kn->add_option("--n", n, "n >= 1")->required();
    kn->add_flag("--cross-check", cross_check, "Recompute V_0(J') from the tensor-product complex");
    kn->callback([&] {
        action = [&](const VSource& src) {
            return CommandResult::from_report("examples kn", reproduce_kn(n, KnOptions{cross_check}, src));
        };
    });
    auto* whitehead = examples->add_subcommand("whitehead", "Bound for the knotified Hopf link");
    whitehead->callback([&] {
        action = [&](const VSource& src) {
            return CommandResult::from_report("examples whitehead", reproduce_whitehead(src));
        };
    });

    auto* seifert = app.add_subcommand("seifert", "Seifert fibred presentations");
    seifert->require_subcommand(1);
    seifert->fallthrough();
    auto* seifert_kn = seifert->add_subcommand("kn", "Large surgery on T(2n+1,4n+3) # T(2n+1,4n+3)");
    seifert_kn->add_option("--n", n, "n >= 1")->required();
    seifert_kn->callback([&] {
        action = [&](const VSource&) {
            const auto s = kn_seifert(n);
            CommandResult r;
            r.command = "seifert kn";
            r.inputs.emplace_back("n", std::to_string(n));
            r.trail.push_back({"e0", s.e0, kEuler});
            json fibers = json::array();
            for (std::size_t j = 0; j < s.fibers.size(); ++j) {
                r.trail.push_back({idx("r", static_cast<std::int64_t>(j + 1)), s.fibers[j], kNcf});
                fibers.push_back(s.fibers[j].str());
            }
            r.value = euler_number(s);
            r.trail.push_back({"e", r.value, kKnEuler});
            r.extra["e0"] = s.e0;
            r.extra["fibers"] = fibers;
            return r;
        };
    });

    auto* ncf = app.add_subcommand("ncf", "Negative continued fractions");
    ncf->require_subcommand(1);
    ncf->fallthrough();
    auto* ncf_eval_cmd = ncf->add_subcommand("eval", "Evaluate [a_1, ..., a_k]^-");
    ncf_eval_cmd->add_option("coeffs", ncf_text, "Comma-separated coefficients, each >= 2")->required();
    ncf_eval_cmd->callback([&] {
        action = [&](const VSource&) {
            const auto coeffs = parse_int_list(ncf_text);
            CommandResult r;
            r.command = "ncf eval";
            r.inputs.emplace_back("coefficients", ncf_text);
            r.value = ncf_eval(coeffs);
            r.trail.push_back({"[" + ncf_text + "]^-", r.value, kNcf});
            return r;
        };
    });
    auto* ncf_expand_cmd = ncf->add_subcommand("expand", "Expand p/q > 1 as [a_1, ..., a_k]^-");
    ncf_expand_cmd->add_option("fraction", ncf_text, "p/q")->required();
    ncf_expand_cmd->callback([&] {
        action = [&](const VSource&) {
            const auto r_in = Rational::parse(ncf_text);
            const auto coeffs = ncf_expand(r_in);
            CommandResult r;
            r.command = "ncf expand";
            r.inputs.emplace_back("fraction", r_in.str());
            r.value = r_in;
            std::string joined;
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                joined += (j ? "," : "") + std::to_string(coeffs[j]);
                r.trail.push_back({idx("a", static_cast<std::int64_t>(j + 1)), coeffs[j], kNcf});
            }
            r.trail.push_back({"[" + joined + "]^-", ncf_eval(coeffs), kNcf});
            r.extra["coefficients"] = coeffs;
            return r;
        };
    });

    try {
        auto reversed = protect_mirrors(raw_args);
        std::reverse(reversed.begin(), reversed.end());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        return report_error(out, err, json_errors, "usage", e.what(), 2);
    }

    const OutputFormat format = parse_format(format_name);
    const bool as_json = format == OutputFormat::Json;

    std::unique_ptr<ResultCache> cache;
    if (!no_cache) {
        if (cache_path.empty())
            if (const char* env = std::getenv(kCacheEnv)) cache_path = env;
        if (!cache_path.empty()) {
            cache = std::make_unique<ResultCache>(cache_path);
            cache->load(err);
        }
    }
    std::optional<CachedVSource> cached;
    if (cache) cached.emplace(*cache);
    const VSource& source = cached ? static_cast<const VSource&>(*cached) : default_v_source();

    try {
        const CommandResult result = action(source);
        write_result(out, result, format);
    } catch (const ValidationError& e) {
        return report_error(out, err, as_json, "validation", e.what(), 2);
    } catch (const TruncationError& e) {
        return report_error(out, err, as_json, "truncation", e.what(), 1);
    } catch (const InternalError& e) {
        return report_error(out, err, as_json, "internal", e.what(), 1);
    } catch (const std::exception& e) {
        return report_error(out, err, as_json, "internal", e.what(), 1);
    }

    if (cache && cache->dirty()) cache->store(err);
    return 0;
}

}  // namespace dwind::cli
