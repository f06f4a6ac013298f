// ncforms: exact calculus on noncommutative and quantum differential forms.
#include "ncforms/json_io.hpp"
#include "ncforms/parser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace ncforms;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct AlgebraOptions {
    std::string algebra = "free";
    int n = 2;
    std::string parity;
    std::string q_file;
    std::string group;
    std::string variant = "left";
    std::string config;
    std::string lie = "sl2";
    std::string a_file;
    bool finite = false;
};

struct Context {
    SignaturePtr sig;
    std::optional<RewriteSystem> sys;
    std::optional<QMatrix> Q;
    std::optional<GroupedQSystem> grouped;
};

std::vector<int> parse_int_list(const std::string &s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

LieData lie_by_name(const std::string &name) {
    if (name == "aff1") return lie_aff1();
    if (name == "sl2") return lie_sl2();
    if (name == "gl2") return lie_gl(2);
    if (name == "gl3") return lie_gl(3);
    if (name == "so3") return lie_so3();
    if (name == "gl2-fermionic") return lie_gl(2, {1, 1});
    return load_liedata(read_file(name)); // treat as a file path
}

Context make_context(const AlgebraOptions &o) {
    Context ctx;
    if (!o.config.empty()) {
        ctx.sys = load_presentation(read_file(o.config));
        ctx.sig = ctx.sys->sig();
        return ctx;
    }
    if (o.algebra == "free" || o.algebra == "graded") {
        std::vector<int> parities;
        if (!o.parity.empty())
            parities = parse_int_list(o.parity);
        else if (o.algebra == "graded")
            parities.assign(o.n, 1);
        ctx.sig = free_signature(o.n, parities);
        return ctx;
    }
    if (o.algebra == "weyl") {
        ctx.sys = weyl_algebra(o.n);
    } else if (o.algebra == "q") {
        if (!o.group.empty() ||
            (!o.q_file.empty() && qmatrix_json_has_group(read_file(o.q_file)))) {
            GroupQMatrix gq = o.q_file.empty()
                                  ? GroupQMatrix::symbolic(o.n, GroupIndex(parse_int_list(o.group)))
                                  : load_group_qmatrix(read_file(o.q_file));
            ctx.grouped = group_algebra(gq);
            ctx.sys = ctx.grouped->sys();
        } else {
            ctx.Q = o.q_file.empty() ? QMatrix::symbolic(o.n)
                                     : load_qmatrix(read_file(o.q_file));
            ctx.sys = q_algebra(*ctx.Q);
        }
    } else if (o.algebra == "aff1") {
        ctx.sys = aff1_complex();
    } else if (o.algebra == "ehrenfest") {
        if (!o.a_file.empty()) {
            ctx.sys = ehrenfest_complex(load_matrix(read_file(o.a_file)));
        } else {
            // identity coupling of the requested size
            auto t = empty_params();
            std::vector<std::vector<Scalar>> A(o.n, std::vector<Scalar>(o.n, Scalar(t)));
            for (int i = 0; i < o.n; ++i) A[i][i] = Scalar::rational(t, 1);
            ctx.sys = ehrenfest_complex(A);
        }
    } else if (o.algebra == "gl") {
        ctx.sys = gl_complex(o.n, o.variant == "right" ? GlVariant::right
                                                       : GlVariant::left);
    } else if (o.algebra == "so") {
        ctx.sys = so_complex(o.n);
    } else if (o.algebra == "general") {
        ctx.sys = general_complex(lie_by_name(o.lie), o.finite);
    } else if (o.algebra == "clebsch") {
        LieData d = lie_by_name(o.lie);
        std::vector<int> par = d.parities();
        if (par.empty()) par.assign(d.repdim(), 0);
        ctx.sys = clebsch_algebra(par, d.params());
    } else {
        throw CLI::ValidationError("--algebra", "unknown algebra: " + o.algebra);
    }
    ctx.sig = ctx.sys->sig();
    return ctx;
}

void add_algebra_flags(CLI::App *cmd, AlgebraOptions &o) {
    cmd->add_option("--algebra", o.algebra,
                    "free|graded|weyl|q|aff1|ehrenfest|gl|so|general|clebsch");
    cmd->add_option("--n", o.n, "generator count");
    cmd->add_option("--parity", o.parity, "comma list of Z2 parities for the x's");
    cmd->add_option("--Q", o.q_file, "Q-matrix JSON file");
    cmd->add_option("--group", o.group, "finite abelian group moduli, e.g. 2,3");
    cmd->add_option("--variant", o.variant, "left|right (gl complexes)");
    cmd->add_option("--config", o.config, "algebra presentation JSON file");
    cmd->add_option("--lie", o.lie,
                    "Lie data: aff1|sl2|gl2|gl3|so3|gl2-fermionic or a JSON file");
    cmd->add_option("--A", o.a_file, "coupling-matrix JSON (ehrenfest)");
    cmd->add_flag("--finite", o.finite, "impose the finite-rank ghost relations");
}

void emit(bool json, bool ok, const std::string &key, const std::string &value,
          const std::string &extra_key = "", const std::string &extra_value = "") {
    if (json) {
        ordered_json j;
        j["ok"] = ok;
        j[key] = value;
        if (!extra_key.empty()) j[extra_key] = extra_value;
        std::cout << j.dump(2) << "\n";
    } else if (extra_key.empty()) {
        std::cout << value << "\n";
    } else {
        std::cout << key << ": " << value << "\n"
                  << extra_key << ": " << extra_value << "\n";
    }
}

// splits "x1=expr,x2=expr" at top-level commas (brackets protected)
std::vector<std::pair<std::string, std::string>> parse_fields(const std::string &s) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &p : parts) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("--field expects name=expression");
        out.emplace_back(p.substr(0, eq), p.substr(eq + 1));
    }
    return out;
}

DiscretePoly parse_poly2(const std::string &text, int variant) {
    // the input is a polynomial in the commuting images, so letters are
    // counted without applying the quotient relations
    RewriteSystem sub = gl_aff_subcomplex(variant == 1 ? GlVariant::left
                                                       : GlVariant::right);
    auto sig = sub.sig();
    Form f = parse_form(text, sig, &sub);
    DiscretePoly p(empty_params());
    for (const auto &[w, c] : f.terms()) {
        int ny = 0, nx = 0;
        for (uint32_t g : w) {
            if (sig->gen(g).name == "y") ++ny;
            else if (sig->gen(g).name == "x") ++nx;
            else throw std::runtime_error("expected a polynomial in x, y");
        }
        p.add_term(ny, nx, lift_scalar(c, empty_params()));
    }
    return p;
}

std::string poly2_str(const DiscretePoly &p) { return p.str(); }

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact calculus on noncommutative and quantum differential forms"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    AlgebraOptions aopt;
    std::string expr, var_name, fields_text;
    int field_parity = 0;

    auto *cmd_norm = app.add_subcommand("normalize", "normal form in the active algebra");
    add_algebra_flags(cmd_norm, aopt);
    cmd_norm->add_option("expr", expr)->required();

    auto *cmd_d = app.add_subcommand("d", "differential (normalized when applicable)");
    add_algebra_flags(cmd_d, aopt);
    cmd_d->add_option("expr", expr)->required();

    auto *cmd_prim = app.add_subcommand("primitive", "Poincare primitive of a closed form");
    add_algebra_flags(cmd_prim, aopt);
    cmd_prim->add_option("expr", expr)->required();

    auto *cmd_hc = app.add_subcommand("homotopy-check",
                                      "homotopy-formula residual of a t/tau form");
    add_algebra_flags(cmd_hc, aopt);
    cmd_hc->add_option("expr", expr)->required();

    auto *cmd_contract = app.add_subcommand("contract", "interior product X -| expr");
    add_algebra_flags(cmd_contract, aopt);
    cmd_contract->add_option("--field", fields_text, "x-values, e.g. x1=x1^2,x2=0")
        ->required();
    cmd_contract->add_option("--field-parity", field_parity, "Z2 parity of the field");
    cmd_contract->add_option("expr", expr)->required();

    auto *cmd_partial = app.add_subcommand("partial", "quantum / Q partial derivative");
    add_algebra_flags(cmd_partial, aopt);
    cmd_partial->add_option("--var", var_name, "point generator name")->required();
    cmd_partial->add_option("expr", expr)->required();

    // qspace alias: qspace --n 3 --Q Q.json (d|primitive|partial k) expr
    auto *cmd_qspace = app.add_subcommand("qspace", "Q-space operations");
    add_algebra_flags(cmd_qspace, aopt);
    std::string q_verb;
    std::string q_partial_idx;
    cmd_qspace->add_option("verb", q_verb, "d|primitive|partial")->required();
    cmd_qspace->add_option("arg1", q_partial_idx, "partial index k, or the expression");
    cmd_qspace->add_option("arg2", expr, "expression");

    auto *cmd_complex = app.add_subcommand("complex", "complex constructors and audits");
    add_algebra_flags(cmd_complex, aopt);
    std::string complex_verb = "build";
    std::string preset = "gl";
    int dvariant = 1;
    std::string dy_expr = "0", dx_expr = "0";
    cmd_complex->add_option("verb", complex_verb,
                            "build|audit|discrete-d|discrete-primitive")
        ->required();
    cmd_complex->add_option("--preset", preset, "general|aff1|ehrenfest|gl|so");
    cmd_complex->add_option("--discrete-variant", dvariant, "1|2");
    cmd_complex->add_option("--dy", dy_expr, "dy-coefficient (discrete-primitive)");
    cmd_complex->add_option("--dx", dx_expr, "dx-coefficient (discrete-primitive)");
    cmd_complex->add_option("expr", expr, "expression (discrete-d)");

    auto *cmd_verify = app.add_subcommand("verify", "run a lemma suite");
    std::string suite;
    uint64_t seed = 20260810;
    int cases = 50, max_deg = 4;
    cmd_verify->add_option("--suite", suite, "suite name")->required();
    cmd_verify->add_option("--seed", seed, "random seed");
    cmd_verify->add_option("--cases", cases, "cases per check");
    cmd_verify->add_option("--max-deg", max_deg, "maximum word length");

    for (auto *sc : app.get_subcommands(nullptr)) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_verify->parsed()) {
            SuiteResult r = run_suite(suite, seed, cases, max_deg);
            if (json) {
                std::cout << suite_result_json(r) << "\n";
            } else {
                for (const auto &c : r.checks) {
                    std::cout << (c.ok() ? "pass" : "FAIL") << "  " << c.name << "  ("
                              << c.cases << " cases)\n";
                    for (const auto &f : c.failures) std::cout << "      " << f << "\n";
                }
                std::cout << (r.ok() ? "suite passed" : "suite FAILED") << "\n";
            }
            return r.ok() ? kExitOk : kExitCheckFailed;
        }

        if (cmd_complex->parsed()) {
            if (aopt.variant == "1" || aopt.variant == "2")
                dvariant = std::stoi(aopt.variant);
            if (complex_verb == "discrete-d") {
                DiscretePoly f = parse_poly2(expr, dvariant);
                DiscreteOneForm w = discrete_d(f, dvariant);
                emit(json, true, "dy", poly2_str(w.dy_coeff), "dx", poly2_str(w.dx_coeff));
                return kExitOk;
            }
            if (complex_verb == "discrete-primitive") {
                DiscreteOneForm w{parse_poly2(dy_expr, dvariant),
                                  parse_poly2(dx_expr, dvariant)};
                DiscretePoly p = discrete_poincare(w, dvariant);
                emit(json, true, "primitive", poly2_str(p));
                return kExitOk;
            }
            if (!preset.empty() && aopt.config.empty()) aopt.algebra = preset;
            Context ctx = make_context(aopt);
            if (!ctx.sys) throw std::runtime_error("complex verbs need an algebra");
            if (complex_verb == "build") {
                std::cout << export_presentation(*ctx.sys) << "\n";
                return kExitOk;
            }
            if (complex_verb == "audit") {
                Report dcomp = check_d_compatibility(*ctx.sys);
                Report confl = check_local_confluence(*ctx.sys, 3);
                bool ok = dcomp.empty() && confl.empty();
                if (json) {
                    ordered_json j;
                    j["ok"] = ok;
                    j["d_compatible"] = dcomp.empty();
                    j["locally_confluent"] = confl.empty();
                    if (!dcomp.empty())
                        j["counterexample"] = {{"kind", "d-compatibility"},
                                               {"detail", dcomp.items.front().what}};
                    else if (!confl.empty())
                        j["counterexample"] = {{"kind", "confluence"},
                                               {"word", confl.items.front().what},
                                               {"detail", confl.items.front().detail}};
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << (ok ? "audit passed" : "audit FAILED") << "\n"
                              << dcomp.str() << confl.str();
                }
                return ok ? kExitOk : kExitCheckFailed;
            }
            throw std::runtime_error("unknown complex verb: " + complex_verb);
        }

        if (cmd_qspace->parsed()) {
            aopt.algebra = "q";
            Context ctx = make_context(aopt);
            if (q_verb == "partial") {
                if (expr.empty()) throw std::runtime_error("partial needs k and expr");
                if (!ctx.Q)
                    throw std::runtime_error(
                        "group-indexed spaces: use `partial --var <name>`");
                int k = std::stoi(q_partial_idx) - 1;
                Form H = parse_form(expr, ctx.sig, &*ctx.sys);
                emit(json, true, "result",
                     q_partial(H, k, *ctx.sys, *ctx.Q).str());
                return kExitOk;
            }
            std::string text = expr.empty() ? q_partial_idx : expr;
            Form f = parse_form(text, ctx.sig, &*ctx.sys);
            if (q_verb == "d") {
                emit(json, true, "result", differential(f, *ctx.sys).str());
                return kExitOk;
            }
            if (q_verb == "primitive") {
                Primitive p = poincare_primitive(f, &*ctx.sys);
                emit(json, true, "primitive", p.primitive.str(), "remainder",
                     p.remainder.str());
                return kExitOk;
            }
            throw std::runtime_error("unknown qspace verb: " + q_verb);
        }

        Context ctx = make_context(aopt);
        const RewriteSystem *sys = ctx.sys ? &*ctx.sys : nullptr;

        if (cmd_norm->parsed()) {
            Form f = parse_form(expr, ctx.sig, sys);
            emit(json, true, "result", sys ? sys->normalize(f).str() : f.str());
            return kExitOk;
        }
        if (cmd_d->parsed()) {
            Form f = parse_form(expr, ctx.sig, sys);
            Form df = sys ? differential(f, *sys) : differential(f);
            emit(json, true, "result", df.str());
            return kExitOk;
        }
        if (cmd_prim->parsed()) {
            Form f = parse_form(expr, ctx.sig, sys);
            Primitive p;
            if (sys && sys->normal_transfer_exact())
                p = quantum_poincare(f, *sys);
            else
                p = poincare_primitive(f, sys);
            emit(json, true, "primitive", p.primitive.str(), "remainder",
                 p.remainder.str());
            return kExitOk;
        }
        if (cmd_hc->parsed()) {
            ExtendedForm w = parse_extended(expr, ctx.sig, sys);
            if (sys) w = w.normalized(*sys);
            Form r = homotopy_residual(w, sys);
            emit(json, r.is_zero(), "residual", r.str());
            return r.is_zero() ? kExitOk : kExitCheckFailed;
        }
        if (cmd_contract->parsed()) {
            std::vector<Form> values(ctx.sig->points().size(), Form::zero(ctx.sig));
            for (const auto &[name, vexpr] : parse_fields(fields_text)) {
                int slot = ctx.sig->slot(name);
                if (slot < 0) throw std::runtime_error("unknown generator " + name);
                int idx = ctx.sig->point_index(static_cast<uint32_t>(slot));
                if (idx < 0) throw std::runtime_error(name + " is not a point generator");
                values[idx] = parse_form(vexpr, ctx.sig, sys);
            }
            Derivation X(ctx.sig, field_parity, std::move(values));
            Form f = parse_form(expr, ctx.sig, sys);
            emit(json, true, "result", X.contract(f).str());
            return kExitOk;
        }
        if (cmd_partial->parsed()) {
            if (!sys) throw std::runtime_error("partial needs weyl or q algebra");
            Form H = parse_form(expr, ctx.sig, sys);
            int slot = ctx.sig->slot(var_name);
            if (slot < 0) throw std::runtime_error("unknown generator " + var_name);
            Form r;
            if (ctx.Q) {
                int idx = ctx.sig->point_index(static_cast<uint32_t>(slot));
                r = q_partial(H, idx, *sys, *ctx.Q);
            } else {
                r = weyl_partial(H, static_cast<uint32_t>(slot), *sys);
            }
            emit(json, true, "result", r.str());
            return kExitOk;
        }
        throw std::runtime_error("no subcommand");
    } catch (const NotClosedError &e) {
        emit(json, false, "error", "NotClosed");
        return kExitCheckFailed;
    } catch (const ParseError &e) {
        emit(json, false, "error", e.what());
        return kExitUsage;
    } catch (const std::exception &e) {
        emit(json, false, "error", e.what());
        return kExitUsage;
    }
    return kExitOk;
}
