#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <modulislope/modulislope.hpp>

namespace modulislope::cli {

enum ExitCode : int {
    ok = 0,
    claim_failure = 1,
    internal = 2,
    usage = 64,
    data = 65,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json = false;
    int precision = 6;
    bool color = false;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

/// "catalog:<id>" or a path to a class file.
inline NamedClass load_class(const std::string& ref) {
    constexpr std::string_view prefix = "catalog:";
    if (ref.rfind(prefix, 0) == 0) return lookup_class(std::string_view(ref).substr(prefix.size()));
    NamedClass nc = named_from_json(read_json(ref));
    if (nc.id.empty()) nc.id = ref;
    return nc;
}

inline std::string exact_and_decimal(const Rational& r, int precision) {
    return to_string(r) + " (= " + to_decimal(r, precision) + ")";
}

inline void print_class(Context& ctx, const NamedClass& nc) {
    if (ctx.json) {
        ctx.out << named_to_json(nc).dump(2) << "\n";
        return;
    }
    ctx.out << nc.cls.str() << "\n";
    for (const auto& [name, b] : nc.bounds.entries()) {
        ctx.out << "  " << name;
        if (b.lo) ctx.out << (b.lo_strict ? " > " : " >= ") << to_string(*b.lo);
        if (b.hi) ctx.out << (b.hi_strict ? " < " : " <= ") << to_string(*b.hi);
        ctx.out << "\n";
    }
}

inline const char* paint(const Context& ctx, ClaimStatus s) {
    if (!ctx.color) return "";
    switch (s) {
        case ClaimStatus::Pass:
            return "\033[32m";
        case ClaimStatus::Fail:
            return "\033[31m";
        case ClaimStatus::Discrepancy:
            return "\033[33m";
    }
    return "";
}

inline const char* reset(const Context& ctx) { return ctx.color ? "\033[0m" : ""; }

// ---------------------------------------------------------------------------

inline int cmd_catalog_list(Context& ctx) {
    if (ctx.json) {
        json arr = json::array();
        for (const auto& [id, desc] : catalog_entries()) arr.push_back({{"id", id}, {"description", desc}});
        ctx.out << arr.dump(2) << "\n";
        return ok;
    }
    for (const auto& [id, desc] : catalog_entries()) ctx.out << id << "\t" << desc << "\n";
    return ok;
}

inline int cmd_catalog_show(Context& ctx, const std::string& id) {
    ctx.out << named_to_json(lookup_class(id)).dump(2) << "\n";
    return ok;
}

inline int cmd_curve_show(Context& ctx, const std::string& name) {
    const TestCurve c = lookup_curve(name);
    if (ctx.json) {
        json nums = json::object();
        for (const auto& [gen, v] : c.numbers()) nums[generator_name(gen, c.space())] = to_string(v);
        ctx.out << json{{"name", c.name()}, {"space", space_to_json(c.space())}, {"numbers", nums}}.dump(2) << "\n";
        return ok;
    }
    ctx.out << c.name() << " on " << c.space().str() << "\n";
    for (const auto& [gen, v] : c.numbers()) ctx.out << "  " << generator_name(gen, c.space()) << " = " << to_string(v) << "\n";
    return ok;
}

inline int cmd_curve_dot(Context& ctx, const std::string& name, const std::string& ref) {
    const TestCurve c = lookup_curve(name);
    const NamedClass nc = load_class(ref);
    if (nc.cls.space() != c.space())
        throw SpaceMismatch("curve lives on " + c.space().str() + ", class on " + nc.cls.space().str());
    const LinExpr v = intersect(c, nc.cls);
    const Interval iv = range(v, nc.bounds);
    const auto show = [](const std::optional<Rational>& r) { return r ? to_string(*r) : std::string("unbounded"); };
    if (ctx.json) {
        json j{{"curve", c.name()}, {"class", nc.id}, {"value", v.str()}};
        if (!v.is_constant()) j["range"] = {{"lo", show(iv.lo)}, {"hi", show(iv.hi)}};
        ctx.out << j.dump(2) << "\n";
        return ok;
    }
    ctx.out << v.str();
    if (!v.is_constant()) ctx.out << "  in [" << show(iv.lo) << ", " << show(iv.hi) << "]";
    ctx.out << "\n";
    return ok;
}

inline int cmd_map_attach(Context& ctx, int i, int g, const std::string& ref) {
    const NamedClass nc = load_class(ref);
    print_class(ctx, {"attach:" + std::to_string(i) + ":" + std::to_string(g), pullback_attach(i, g, nc.cls), nc.bounds});
    return ok;
}

inline int cmd_map_pushforward(Context& ctx, const std::vector<std::string>& args) {
    QuadraticClass q = [&] {
        if (args.size() == 1) return quadratic_from_json(read_json(args[0]));
        if (args.size() == 2) return product(load_class(args[0]).cls, load_class(args[1]).cls);
        throw UsageError("map pushforward takes a quadratic-class file or two classes on M_{g,1}");
    }();
    print_class(ctx, {"pushforward", pushforward(q), {}});
    return ok;
}

inline int cmd_map_forget(Context& ctx, int n, const std::string& ref) {
    const NamedClass nc = load_class(ref);
    print_class(ctx, {"forget-pullback:" + std::to_string(n), pullback_forgetful_to_pointed(nc.cls, n), nc.bounds});
    return ok;
}

inline int cmd_slope(Context& ctx, const std::string& ref) {
    const NamedClass nc = load_class(ref);
    const Slope s = slope(nc);
    if (ctx.json) {
        json j{{"class", nc.id}, {"infinite", s.infinite}};
        if (!s.infinite) {
            j["slope"] = to_string(s.value);
            j["decimal"] = to_decimal(s.value, ctx.precision);
        }
        if (!s.note.empty()) j["note"] = s.note;
        ctx.out << j.dump(2) << "\n";
        return ok;
    }
    if (s.infinite)
        ctx.out << "infinity" << (s.note.empty() ? "" : " (" + s.note + ")") << "\n";
    else
        ctx.out << exact_and_decimal(s.value, ctx.precision) << "\n";
    if (!s.note.empty()) ctx.err << "warning: " << s.note << "\n";
    return ok;
}

inline int cmd_decompose(Context& ctx, const std::string& target_ref, const std::vector<std::string>& gen_refs,
                         bool free_boundary) {
    const NamedClass target = load_class(target_ref);
    std::vector<NamedClass> gens;
    for (const auto& r : gen_refs) gens.push_back(load_class(r));
    const EffectivityCertificate cert = decompose(target.cls, gens, free_boundary, target.bounds);
    json j = certificate_to_json(cert);
    j["verified"] = verify_certificate(cert, target.cls, gens, free_boundary, target.bounds);
    ctx.out << j.dump(2) << "\n";
    return ok;
}

inline int cmd_kodaira(Context& ctx, int n, const Rational& floor) {
    if (n == 10) {
        const M10_10Report rep = check_m10_10_nonnegative();
        if (ctx.json) {
            json mins = json::object();
            for (const auto& [i, v] : rep.boundary_minimum) mins[std::to_string(i)] = to_string(v);
            ctx.out << json{{"n", 10},
                            {"holds", rep.holds()},
                            {"lambda_residual", rep.lambda_residual.str()},
                            {"irr_residual", rep.irr_residual.str()},
                            {"boundary_divisors", rep.boundary_count},
                            {"boundary_minimum_by_genus", mins}}
                           .dump(2)
                    << "\n";
        } else {
            ctx.out << "K - 2 K_10 - D_10 on M_{10,10}: " << (rep.holds() ? "nonnegative" : "NOT nonnegative") << "\n";
            ctx.out << "  lambda residual " << rep.lambda_residual.str() << ", delta_irr residual "
                    << rep.irr_residual.str() << "\n";
            ctx.out << "  " << rep.boundary_count << " boundary divisors; worst-case minimum by genus:";
            for (const auto& [i, v] : rep.boundary_minimum) ctx.out << " " << i << ":" << to_string(v);
            ctx.out << "\n";
        }
        return rep.holds() ? ok : claim_failure;
    }
    if (n == 9) {
        const M10_9Summary s = check_m10_9_negative();
        const auto& sys = s.system;
        json y = json::array();
        if (sys.solution.status == lp::Status::Infeasible)
            for (const auto& v : sys.solution.dual) y.push_back(to_string(v));
        if (ctx.json) {
            ctx.out << json{{"n", 9},
                            {"infeasible", sys.infeasible()},
                            {"R.K", to_string(sys.r_dot_k)},
                            {"T.K", to_string(sys.t_dot_k)},
                            {"R.K9", to_string(sys.r_dot_kn)},
                            {"T.K9", to_string(sys.t_dot_kn)},
                            {"R.delta_irr", to_string(sys.r_dot_irr)},
                            {"T.delta_irr", to_string(sys.t_dot_irr)},
                            {"farkas", y}}
                           .dump(2)
                    << "\n";
        } else {
            ctx.out << "K = m K_9 + n delta_irr + E on M_{10,9}: "
                    << (sys.infeasible() ? "no solution with m, n >= 0" : "solution exists") << "\n";
            ctx.out << "  R.K = " << to_string(sys.r_dot_k) << ", T.K = " << to_string(sys.t_dot_k)
                    << ", R.K_9 = " << to_string(sys.r_dot_kn) << ", T.K_9 = " << to_string(sys.t_dot_kn)
                    << ", T.delta_irr = " << to_string(sys.t_dot_irr) << "\n";
            if (!y.empty()) ctx.out << "  Farkas vector " << y.dump() << " (verified)\n";
        }
        return s.holds() ? ok : claim_failure;
    }
    if (n >= 11) {
        const GeneralTypeReport rep = general_type_certificate(n, floor);
        if (ctx.json) {
            json c = json::array();
            for (const auto& v : rep.c) c.push_back(to_string(v));
            ctx.out << json{{"n", n},
                            {"ratio_floor", to_string(floor)},
                            {"feasible", rep.feasible},
                            {"verified", rep.certificate_verified},
                            {"margin", to_string(rep.margin)},
                            {"alpha", to_string(rep.alpha)},
                            {"beta", to_string(rep.beta)},
                            {"a", to_string(rep.a)},
                            {"b_irr", to_string(rep.b_irr)},
                            {"c", c},
                            {"rows", rep.rows}}
                           .dump(2)
                    << "\n";
        } else {
            ctx.out << "K - alpha K_n - beta D_n = a lambda - b_irr delta_irr + sum c_i psi_i + E on M_{10," << n
                    << "}: " << (rep.feasible ? "found" : "no positive solution") << "\n";
            ctx.out << "  alpha = " << to_string(rep.alpha) << ", beta = " << to_string(rep.beta)
                    << ", a = " << to_string(rep.a) << ", b_irr = " << to_string(rep.b_irr) << "\n";
            ctx.out << "  margin " << to_string(rep.margin) << ", a/b_irr >= " << to_string(floor)
                    << (rep.certificate_verified ? ", verified" : ", NOT verified") << "\n";
        }
        return rep.feasible && rep.certificate_verified ? ok : claim_failure;
    }
    throw UsageError("kodaira check supports --n 9, 10 or >= 11");
}

inline int cmd_ineq(Context& ctx, int genus, const std::string& ref, bool excludes_z) {
    const NamedClass nc = load_class(ref);
    const DivisorClass& d = nc.cls;
    if (d.space() != ModuliSpace{genus, 0})
        throw SpaceMismatch("class lives on " + d.space().str() + ", expected M_" + std::to_string(genus));
    struct Row {
        std::string name;
        LinExpr residual;
        std::optional<Rational> min;
    };
    std::vector<Row> rows;
    const auto add = [&](std::string name, const LinExpr& r) { rows.push_back({std::move(name), r, worst_case_min(r, nc.bounds)}); };
    for (int i = 2; i <= std::min(11, genus - 1); ++i) {
        if (i == 10 && !excludes_z) continue;
        add("(a) i=" + std::to_string(i), ineq_a_residual(d, i, excludes_z));
    }
    add("(c)", -d.delta(1) + d.delta(0) * 12 + d.lambda());
    bool b_ok = true;
    if (genus >= 20) {
        const CaseBDerivation k = derive_case_b_constants();
        const LinExpr strong = -d.delta(10) + d.delta(0) * 78 + d.lambda() * 11;
        const LinExpr weak = -d.delta(10) + d.delta(0) * k.coef_b0 - d.lambda() * k.coef_a;
        add("(b) strong", strong);
        add("(b) weak", weak);
        const auto s = rows[rows.size() - 2].min, w = rows.back().min;
        b_ok = (s && *s >= 0) || (w && *w >= 0);
    }
    bool all = b_ok;
    for (const auto& r : rows)
        if (r.name.rfind("(b)", 0) != 0) all = all && r.min && *r.min >= 0;

    if (ctx.json) {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"inequality", r.name},
                           {"residual", r.residual.str()},
                           {"worst_case", r.min ? to_string(*r.min) : "unbounded"},
                           {"holds", r.min && *r.min >= 0}});
        ctx.out << json{{"genus", genus}, {"holds", all}, {"residuals", arr}}.dump(2) << "\n";
    } else {
        for (const auto& r : rows) {
            ctx.out << r.name << ": residual " << r.residual.str();
            if (!r.residual.is_constant()) ctx.out << " (worst case " << (r.min ? to_string(*r.min) : "unbounded") << ")";
            ctx.out << (r.min && *r.min >= 0 ? "  ok" : "  violated") << "\n";
        }
        if (genus >= 20) ctx.out << "(b): " << (b_ok ? "ok" : "violated") << " (either bound suffices)\n";
        if (genus >= 11 && !excludes_z) ctx.out << "(a) i=10 skipped; pass --excludes-z to include it\n";
    }
    return all ? ok : claim_failure;
}

inline json claim_to_json(const ClaimResult& r) {
    return json{{"id", r.id},         {"status", status_name(r.status)}, {"anchor", r.anchor},
                {"expected", r.expected}, {"computed", r.computed},      {"detail", r.detail}};
}

inline std::string md_escape(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

inline int cmd_verify(Context& ctx, const std::vector<std::string>& args, bool all, bool markdown) {
    ClaimReport rep;
    if (all) {
        if (!args.empty()) throw UsageError("verify --all takes no claim ids");
        rep = run_all_claims();
    } else {
        if (args.empty()) throw UsageError("verify needs --all or a claim id");
        for (const auto& id : args) {
            try {
                rep.results.push_back(run_claim(id));
            } catch (const std::out_of_range& e) {
                throw UsageError(e.what());
            }
        }
    }
    if (ctx.json) {
        json arr = json::array();
        for (const auto& r : rep.results) arr.push_back(claim_to_json(r));
        ctx.out << json{{"claims", arr},
                        {"summary",
                         {{"total", rep.results.size()},
                          {"pass", rep.count(ClaimStatus::Pass)},
                          {"discrepancy", rep.count(ClaimStatus::Discrepancy)},
                          {"fail", rep.count(ClaimStatus::Fail)}}}}
                       .dump(2)
                << "\n";
    } else if (markdown) {
        ctx.out << "| claim | status | expected | computed |\n|---|---|---|---|\n";
        for (const auto& r : rep.results)
            ctx.out << "| " << r.id << " | " << status_name(r.status) << " | " << md_escape(r.expected) << " | "
                    << md_escape(r.computed) << " |\n";
    } else {
        for (const auto& r : rep.results) {
            ctx.out << paint(ctx, r.status) << std::left << std::setw(12) << status_name(r.status) << reset(ctx) << r.id
                    << "\n";
            ctx.out << "    expected: " << r.expected << "\n    computed: " << r.computed << "\n";
            if (!r.detail.empty()) ctx.out << "    " << r.detail << "\n";
        }
    }
    if (!ctx.json) {
        ctx.out << (markdown ? "\n" : "") << rep.results.size() << " claims: " << rep.count(ClaimStatus::Pass) << " pass, "
                << rep.count(ClaimStatus::Discrepancy) << " discrepancy, " << rep.count(ClaimStatus::Fail) << " fail\n";
    }
    if (rep.internal_error()) return internal;
    return rep.ok() ? ok : claim_failure;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color = false) {
    CLI::App app{"Exact divisor-class calculus on moduli spaces of curves"};
    app.name("modulislope");
    app.require_subcommand(1);
    app.fallthrough();

    bool json_out = false;
    int precision = 6;
    app.add_flag("--json", json_out, "Emit JSON");
    app.add_option("--precision", precision, "Decimal digits for display")->check(CLI::Range(0, 100));

    auto* catalog = app.add_subcommand("catalog", "Named classes");
    catalog->require_subcommand(1);
    auto* catalog_list = catalog->add_subcommand("list", "List catalog ids");
    auto* catalog_show = catalog->add_subcommand("show", "Print a catalog class as JSON");
    std::string catalog_id;
    catalog_show->add_option("id", catalog_id, "Catalog id, e.g. k3 or bn:10")->required();

    auto* curve = app.add_subcommand("curve", "Test curves");
    curve->require_subcommand(1);
    auto* curve_show = curve->add_subcommand("show", "Intersection numbers of a test curve");
    auto* curve_dot = curve->add_subcommand("dot", "Intersect a test curve with a class");
    std::string curve_name, class_ref;
    curve_show->add_option("name", curve_name, "lefschetz:<g>, attached:<i>:<g>, R or T")->required();
    curve_dot->add_option("name", curve_name, "Test curve")->required();
    curve_dot->add_option("class", class_ref, "catalog:<id> or class file")->required();

    auto* map = app.add_subcommand("map", "Pullbacks and pushforwards");
    map->require_subcommand(1);
    auto* map_attach = map->add_subcommand("attach", "Pull back along the attaching map M_{i,1} -> M_g");
    int attach_i = 0, attach_g = 0, forget_n = 0;
    map_attach->add_option("--i", attach_i, "Genus of the pointed curve")->required();
    map_attach->add_option("--g", attach_g, "Target genus")->required();
    map_attach->add_option("class", class_ref, "catalog:<id> or class file")->required();
    auto* map_push = map->add_subcommand("pushforward", "Push forward a quadratic class from M_{g,1}");
    std::vector<std::string> push_args;
    map_push->add_option("input", push_args, "Quadratic-class file, or two classes to multiply")->required()->expected(1, 2);
    auto* map_forget = map->add_subcommand("forget-pullback", "Pull back from M_g to M_{g,n}");
    map_forget->add_option("--n", forget_n, "Number of marked points")->required();
    map_forget->add_option("class", class_ref, "catalog:<id> or class file")->required();

    auto* slope_cmd = app.add_subcommand("slope", "Slope of a class on M_g");
    slope_cmd->add_option("class", class_ref, "catalog:<id> or class file")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Nonnegative combination or Farkas certificate");
    std::string target_ref;
    std::vector<std::string> gen_refs;
    bool free_boundary = false;
    decompose_cmd->add_option("--target", target_ref, "Target class")->required();
    decompose_cmd->add_option("--gen", gen_refs, "Generator class (repeatable)")->required();
    decompose_cmd->add_flag("--free-boundary", free_boundary, "Allow nonnegative boundary classes");

    auto* kodaira = app.add_subcommand("kodaira", "Canonical-class certificates on M_{10,n}");
    kodaira->require_subcommand(1);
    auto* kodaira_check = kodaira->add_subcommand("check", "Run the certificate for one n");
    int kodaira_n = 0;
    std::string floor_text = "12";
    kodaira_check->add_option("--n", kodaira_n, "Number of marked points")->required();
    kodaira_check->add_option("--ratio-floor", floor_text, "Lower bound for a/b_irr when n >= 11");

    const auto add_ineq_options = [](CLI::App* sub, int& genus, std::string& ref, bool& excludes_z) {
        sub->add_option("--genus", genus, "Genus g")->required();
        sub->add_option("class", ref, "catalog:<id> or class file")->required();
        sub->add_flag("--excludes-z", excludes_z, "Assume the class does not contain Z (enables i = 10)");
    };
    int ineq_genus = 0;
    bool excludes_z = false;
    auto* ineq = app.add_subcommand("ineq", "Necessary inequalities on boundary coefficients");
    add_ineq_options(ineq, ineq_genus, class_ref, excludes_z);

    auto* verify = app.add_subcommand("verify", "Run the claim suite");
    std::vector<std::string> verify_ids;
    bool verify_all = false, markdown = false;
    verify->add_flag("--all", verify_all, "Run every claim");
    verify->add_flag("--markdown", markdown, "Markdown table output");
    verify->add_option("ids", verify_ids, "Claim ids");
    auto* verify_ineq = verify->add_subcommand("ineq", "Same as the top-level ineq verb");
    add_ineq_options(verify_ineq, ineq_genus, class_ref, excludes_z);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    Context ctx{out, err, json_out, precision, color};
    try {
        if (catalog_list->parsed()) return cmd_catalog_list(ctx);
        if (catalog_show->parsed()) return cmd_catalog_show(ctx, catalog_id);
        if (curve_show->parsed()) return cmd_curve_show(ctx, curve_name);
        if (curve_dot->parsed()) return cmd_curve_dot(ctx, curve_name, class_ref);
        if (map_attach->parsed()) return cmd_map_attach(ctx, attach_i, attach_g, class_ref);
        if (map_push->parsed()) return cmd_map_pushforward(ctx, push_args);
        if (map_forget->parsed()) return cmd_map_forget(ctx, forget_n, class_ref);
        if (slope_cmd->parsed()) return cmd_slope(ctx, class_ref);
        if (decompose_cmd->parsed()) return cmd_decompose(ctx, target_ref, gen_refs, free_boundary);
        if (kodaira_check->parsed()) {
            Rational floor;
            try {
                floor = parse_rational(floor_text);
            } catch (const ParseError& e) {
                throw UsageError(std::string("--ratio-floor: ") + e.what());
            }
            return cmd_kodaira(ctx, kodaira_n, floor);
        }
        if (ineq->parsed() || verify_ineq->parsed()) return cmd_ineq(ctx, ineq_genus, class_ref, excludes_z);
        if (verify->parsed()) return cmd_verify(ctx, verify_ids, verify_all, markdown);
        throw UsageError("no command given");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return data;
    } catch (const std::invalid_argument& e) {  // includes SpaceMismatch
        err << "input error: " << e.what() << "\n";
        return data;
    } catch (const std::out_of_range& e) {  // includes InvalidIndex
        err << "input error: " << e.what() << "\n";
        return data;
    } catch (const std::length_error& e) {
        err << "input error: " << e.what() << "\n";
        return data;
    } catch (const DegreeOverflow& e) {
        err << "input error: " << e.what() << "\n";
        return data;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }
}

}  // namespace modulislope::cli
