#include "ncforms/json_io.hpp"
#include "ncforms/parser.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace ncforms;

namespace {

// One algebra context: a signature plus (optionally) a rewrite presentation
// and the Q-data behind it.
struct Algebra {
    SignaturePtr sig;
    std::optional<RewriteSystem> sys;
    std::optional<QMatrix> Q;
    std::optional<GroupedQSystem> grouped;

    const RewriteSystem *sysp() const { return sys ? &*sys : nullptr; }

    std::string normalize(const std::string &expr) const {
        Form f = parse_form(expr, sig, sysp());
        return (sys ? sys->normalize(f) : f).str();
    }
    std::string d(const std::string &expr) const {
        Form f = parse_form(expr, sig, sysp());
        return (sys ? differential(f, *sys) : differential(f)).str();
    }
    std::pair<std::string, std::string> primitive(const std::string &expr) const {
        Form f = parse_form(expr, sig, sysp());
        Primitive p = (sys && sys->normal_transfer_exact())
                          ? quantum_poincare(f, *sys)
                          : poincare_primitive(f, sysp());
        return {p.primitive.str(), p.remainder.str()};
    }
    std::string homotopy_check(const std::string &expr) const {
        ExtendedForm w = parse_extended(expr, sig, sysp());
        if (sys) w = w.normalized(*sys);
        return homotopy_residual(w, sysp()).str();
    }
    std::string contract(const std::string &expr,
                         const std::map<std::string, std::string> &fields,
                         int parity) const {
        std::vector<Form> values(sig->points().size(), Form::zero(sig));
        for (const auto &[name, vexpr] : fields) {
            int slot = sig->slot(name);
            if (slot < 0) throw std::runtime_error("unknown generator " + name);
            int idx = sig->point_index(static_cast<uint32_t>(slot));
            if (idx < 0) throw std::runtime_error(name + " is not a point generator");
            values[idx] = parse_form(vexpr, sig, sysp());
        }
        Derivation X(sig, parity, std::move(values));
        return X.contract(parse_form(expr, sig, sysp())).str();
    }
    std::string partial(const std::string &expr, const std::string &var) const {
        if (!sys) throw std::runtime_error("partial needs a weyl or q algebra");
        Form H = parse_form(expr, sig, sysp());
        int slot = sig->slot(var);
        if (slot < 0) throw std::runtime_error("unknown generator " + var);
        if (Q) {
            int idx = sig->point_index(static_cast<uint32_t>(slot));
            return q_partial(H, idx, *sys, *Q).str();
        }
        return weyl_partial(H, static_cast<uint32_t>(slot), *sys).str();
    }
    py::dict audit() const {
        if (!sys) throw std::runtime_error("audit needs a presented algebra");
        Report dcomp = check_d_compatibility(*sys);
        Report confl = check_local_confluence(*sys, 3);
        py::dict out;
        out["d_compatible"] = dcomp.empty();
        out["locally_confluent"] = confl.empty();
        if (!confl.empty()) out["counterexample"] = confl.items.front().what;
        return out;
    }
    std::vector<std::string> generators() const {
        std::vector<std::string> names;
        for (int s = 0; s < sig->size(); ++s) names.push_back(sig->gen(s).name);
        return names;
    }
    std::string export_json() const {
        if (!sys) throw std::runtime_error("only presented algebras export");
        return export_presentation(*sys);
    }
};

Algebra make_free(int n, const std::vector<int> &parities) {
    Algebra a;
    a.sig = free_signature(n, parities);
    return a;
}

Algebra make_weyl(int n) {
    Algebra a;
    a.sys = weyl_algebra(n);
    a.sig = a.sys->sig();
    return a;
}

Algebra make_qspace(int n, const std::string &q_json) {
    Algebra a;
    if (!q_json.empty() && qmatrix_json_has_group(q_json)) {
        a.grouped = group_algebra(load_group_qmatrix(q_json));
        a.sys = a.grouped->sys();
    } else {
        a.Q = q_json.empty() ? QMatrix::symbolic(n) : load_qmatrix(q_json);
        a.sys = q_algebra(*a.Q);
    }
    a.sig = a.sys->sig();
    return a;
}

LieData lie_by_name(const std::string &name) {
    if (name == "aff1") return lie_aff1();
    if (name == "sl2") return lie_sl2();
    if (name == "gl2") return lie_gl(2);
    if (name == "gl3") return lie_gl(3);
    if (name == "so3") return lie_so3();
    if (name == "gl2-fermionic") return lie_gl(2, {1, 1});
    return load_liedata(name); // JSON text
}

Algebra make_preset(const std::string &name, int n, const std::string &variant,
                    bool finite, const std::string &lie, const std::string &a_json) {
    Algebra a;
    if (name == "weyl") return make_weyl(n);
    if (name == "qspace") return make_qspace(n, "");
    if (name == "aff1") {
        a.sys = aff1_complex();
    } else if (name == "gl") {
        a.sys = gl_complex(n, variant == "right" ? GlVariant::right : GlVariant::left);
    } else if (name == "so") {
        a.sys = so_complex(n);
    } else if (name == "general") {
        a.sys = general_complex(lie_by_name(lie), finite);
    } else if (name == "ehrenfest") {
        if (!a_json.empty()) {
            a.sys = ehrenfest_complex(load_matrix(a_json));
        } else {
            auto t = empty_params();
            std::vector<std::vector<Scalar>> A(n, std::vector<Scalar>(n, Scalar(t)));
            for (int i = 0; i < n; ++i) A[i][i] = Scalar::rational(t, 1);
            a.sys = ehrenfest_complex(A);
        }
    } else if (name == "clebsch") {
        LieData d = lie_by_name(lie);
        std::vector<int> par = d.parities();
        if (par.empty()) par.assign(d.repdim(), 0);
        a.sys = clebsch_algebra(par, d.params());
    } else {
        throw std::runtime_error("unknown preset: " + name);
    }
    a.sig = a.sys->sig();
    return a;
}

Algebra make_from_config(const std::string &json_text) {
    Algebra a;
    a.sys = load_presentation(json_text);
    a.sig = a.sys->sig();
    return a;
}

py::dict verify(const std::string &suite, uint64_t seed, int cases, int max_deg) {
    SuiteResult r = run_suite(suite, seed, cases, max_deg);
    py::dict out;
    out["ok"] = r.ok();
    out["suite"] = r.suite;
    py::list checks;
    for (const auto &c : r.checks) {
        py::dict e;
        e["name"] = c.name;
        e["cases"] = c.cases;
        e["ok"] = c.ok();
        if (!c.ok()) e["counterexample"] = c.failures.front();
        checks.append(e);
    }
    out["checks"] = checks;
    return out;
}

py::dict ghostless() {
    GhostlessVerdict v = sl2_ghostless_check();
    py::dict out;
    out["determinant"] = v.determinant.str();
    out["exists"] = v.exists;
    return out;
}

DiscretePoly poly_from_expr(const std::string &text, int variant) {
    // commutative reading: letters are counted, the quotient rules are not
    // applied, since the data lives in the polynomial images
    RewriteSystem sub =
        gl_aff_subcomplex(variant == 1 ? GlVariant::left : GlVariant::right);
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

py::dict discrete_d_py(const std::string &expr, int variant) {
    DiscreteOneForm w = discrete_d(poly_from_expr(expr, variant), variant);
    py::dict out;
    out["dy"] = w.dy_coeff.str();
    out["dx"] = w.dx_coeff.str();
    return out;
}

std::string discrete_primitive_py(const std::string &dy, const std::string &dx,
                                  int variant) {
    DiscreteOneForm w{poly_from_expr(dy, variant), poly_from_expr(dx, variant)};
    return discrete_poincare(w, variant).str();
}

py::dict clebsch_verify_py(const std::string &name, bool rescaled) {
    Report rep = clebsch_verify(lie_by_name(name), rescaled);
    py::dict out;
    out["ok"] = rep.empty();
    if (!rep.empty()) out["detail"] = rep.str();
    return out;
}

} // namespace

PYBIND11_MODULE(_ncforms, m) {
    m.doc() = "exact calculus on noncommutative and quantum differential forms";

    py::register_exception<NotClosedError>(m, "NotClosedError");
    py::register_exception<IncompatibleRelationsError>(m, "IncompatibleRelationsError");

    py::class_<Algebra>(m, "Algebra")
        .def_static("free", &make_free, py::arg("n"),
                    py::arg("parities") = std::vector<int>{})
        .def_static("weyl", &make_weyl, py::arg("n"))
        .def_static("qspace", &make_qspace, py::arg("n"), py::arg("q_json") = "")
        .def_static("preset", &make_preset, py::arg("name"), py::arg("n") = 2,
                    py::arg("variant") = "left", py::arg("finite") = false,
                    py::arg("lie") = "sl2", py::arg("a_json") = "")
        .def_static("from_config", &make_from_config, py::arg("json_text"))
        .def("normalize", &Algebra::normalize, py::arg("expr"))
        .def("d", &Algebra::d, py::arg("expr"))
        .def("primitive", &Algebra::primitive, py::arg("expr"))
        .def("homotopy_check", &Algebra::homotopy_check, py::arg("expr"))
        .def("contract", &Algebra::contract, py::arg("expr"), py::arg("fields"),
             py::arg("parity") = 0)
        .def("partial", &Algebra::partial, py::arg("expr"), py::arg("var"))
        .def("audit", &Algebra::audit)
        .def("generators", &Algebra::generators)
        .def("export_json", &Algebra::export_json);

    m.def("verify", &verify, py::arg("suite"), py::arg("seed") = 20260810,
          py::arg("cases") = 50, py::arg("max_deg") = 4);
    m.def("suites", &suite_names);
    m.def("sl2_ghostless", &ghostless);
    m.def("discrete_d", &discrete_d_py, py::arg("expr"), py::arg("variant") = 1);
    m.def("discrete_primitive", &discrete_primitive_py, py::arg("dy"), py::arg("dx"),
          py::arg("variant") = 1);
    m.def("clebsch_verify", &clebsch_verify_py, py::arg("name"),
          py::arg("rescaled") = false);
}
