#include "ncforms/quantum.hpp"

#include "ncforms/calculus.hpp"

namespace ncforms {

namespace {

ParamTablePtr ensure_param(ParamTablePtr t, const std::string &name) {
    if (t && t->resolve(name)) return t;
    auto nt = std::make_shared<ParamTable>();
    if (t)
        for (const auto &e : t->entries()) nt->add(e.name, e.inverse_name);
    nt->add(name);
    return nt;
}

ParamTablePtr union_tables(const ParamTablePtr &a, const ParamTablePtr &b) {
    auto nt = std::make_shared<ParamTable>();
    for (const auto &e : a->entries()) nt->add(e.name, e.inverse_name);
    for (const auto &e : b->entries())
        if (!nt->resolve(e.name)) nt->add(e.name, e.inverse_name);
    return nt;
}

} // namespace

RewriteSystem weyl_algebra(int n, ParamTablePtr params) {
    if (n < 1) throw RewriteError("weyl: need n >= 1");
    params = ensure_param(params, "h");
    // slots: dq1..dqn, dp1..dpn, q1..qn, p1..pn
    std::vector<GeneratorInfo> gens(4 * n);
    for (int i = 0; i < n; ++i) {
        std::string s = std::to_string(i + 1);
        gens[i] = {"dq" + s, 1, 1, 2 * n + i, -1};
        gens[n + i] = {"dp" + s, 1, 1, 3 * n + i, -1};
        gens[2 * n + i] = {"q" + s, 0, 0, -1, i};
        gens[3 * n + i] = {"p" + s, 0, 0, -1, n + i};
    }
    auto sig = std::make_shared<const Signature>(std::move(gens), params);
    RewriteSystem sys(sig, "weyl" + std::to_string(n));
    auto h = Scalar::param(params, "h");
    auto q = [&](int i) { return static_cast<uint32_t>(2 * n + i); };
    auto p = [&](int i) { return static_cast<uint32_t>(3 * n + i); };
    // points among themselves
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j < i) {
                sys.add_rule(q(i), q(j), Form::word(sig, {q(j), q(i)}));
                sys.add_rule(p(i), p(j), Form::word(sig, {p(j), p(i)}));
            }
            // p_i q_j = q_j p_i + h d_ij
            Form rhs = Form::word(sig, {q(j), p(i)});
            if (i == j) rhs += Form::scalar(sig, h);
            sys.add_rule(p(i), q(j), rhs);
        }
    // differentials commute with every point, and pass to the left
    for (uint32_t pt = 2 * n; pt < static_cast<uint32_t>(4 * n); ++pt)
        for (uint32_t df = 0; df < static_cast<uint32_t>(2 * n); ++df)
            sys.add_rule(pt, df, Form::word(sig, {df, pt}));
    // differentials anticommute, squares vanish
    for (uint32_t a = 0; a < static_cast<uint32_t>(2 * n); ++a) {
        sys.add_rule(a, a, Form::zero(sig));
        for (uint32_t b = 0; b < a; ++b)
            sys.add_rule(a, b, -Form::word(sig, {b, a}));
    }
    sys.set_normal_transfer_exact(true);
    return sys;
}

RewriteSystem clebsch_algebra(const std::vector<int> &parities, ParamTablePtr params) {
    const int m = static_cast<int>(parities.size());
    if (m < 1) throw RewriteError("clebsch: need at least one pair");
    params = ensure_param(params, "h");
    // slots: G_1..G_m, F^1..F^m
    std::vector<GeneratorInfo> gens(2 * m);
    for (int a = 0; a < m; ++a) {
        std::string s = std::to_string(a + 1);
        gens[a] = {"G" + s, 0, parities[a] & 1, -1, -1};
        gens[m + a] = {"F" + s, 0, parities[a] & 1, -1, -1};
    }
    auto sig = std::make_shared<const Signature>(std::move(gens), params);
    RewriteSystem sys(sig, "clebsch" + std::to_string(m));
    auto h = Scalar::param(params, "h");
    auto G = [&](int a) { return static_cast<uint32_t>(a); };
    auto F = [&](int a) { return static_cast<uint32_t>(m + a); };
    auto sgn = [&](int a, int b) { return (parities[a] & parities[b] & 1) != 0; };
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            // F^a G_b -> (-1)^{p(a)p(b)} G_b F^a + (-1)^{p(a)} d_ab h
            Form rhs = Form::word(sig, {G(b), F(a)});
            if (sgn(a, b)) rhs = -rhs;
            if (a == b) rhs += Form::scalar(sig, (parities[a] & 1) ? -h : h);
            sys.add_rule(F(a), G(b), rhs);
        }
        if (parities[a] & 1) {
            sys.add_rule(F(a), F(a), Form::zero(sig));
            sys.add_rule(G(a), G(a), Form::zero(sig));
        }
        for (int b = 0; b < a; ++b) {
            Form fr = Form::word(sig, {F(b), F(a)});
            Form gr = Form::word(sig, {G(b), G(a)});
            if (sgn(a, b)) {
                fr = -fr;
                gr = -gr;
            }
            sys.add_rule(F(a), F(b), fr);
            sys.add_rule(G(a), G(b), gr);
        }
    }
    sys.set_normal_transfer_exact(true);
    return sys;
}

Form weyl_partial(const Form &H, uint32_t point_slot, const RewriteSystem &sys) {
    const auto &sig = *sys.sig();
    if (H.max_py() != 0) throw RewriteError("weyl_partial expects a 0-form");
    int du = sig.gen(point_slot).d_partner;
    if (du < 0) throw RewriteError("not a point generator");
    Form dH = differential(H, sys);
    Form out(sys.sig());
    for (const auto &[w, c] : dH.terms()) {
        if (w.empty() || static_cast<int>(w.front()) != du) continue;
        out.add_term(Word(w.begin() + 1, w.end()), c);
    }
    return out;
}

Primitive quantum_poincare(const Form &a, const RewriteSystem &sys) {
    if (!sys.normal_transfer_exact())
        throw IncompatibleRelationsError(
            "normal-order transfer is not exact for " + sys.name());
    Form w = sys.normalize(a);
    if (!differential(w, sys).is_zero()) throw NotClosedError();
    RewriteSystem shadow = sys.quadratic_shadow();
    Primitive pr = poincare_primitive(w, &shadow);
    pr.primitive = sys.normalize(pr.primitive);
    return pr;
}

LieData::LieData(int dim, int repdim, ParamTablePtr params)
    : dim_(dim), repdim_(repdim), params_(params ? std::move(params) : empty_params()) {
    if (dim < 1 || repdim < 1) throw RewriteError("LieData: bad dimensions");
}

void LieData::set_c(int i, int j, int k, const Scalar &v) {
    if (i == j) throw RewriteError("c^k_ii must vanish");
    c_[{i, j, k}] = v;
    c_[{j, i, k}] = -v;
}

void LieData::set_A(int i, int beta, int alpha, const Scalar &v) {
    A_[{i, beta, alpha}] = v;
}

void LieData::set_parities(std::vector<int> p) {
    if (static_cast<int>(p.size()) != repdim_)
        throw RewriteError("parity list must have repdim entries");
    parities_ = std::move(p);
}

Scalar LieData::c(int i, int j, int k) const {
    auto it = c_.find({i, j, k});
    return it == c_.end() ? Scalar(params_) : it->second;
}

Scalar LieData::A(int i, int beta, int alpha) const {
    auto it = A_.find({i, beta, alpha});
    return it == A_.end() ? Scalar(params_) : it->second;
}

void LieData::validate() const {
    // antisymmetry is enforced by set_c; check the Jacobi identity
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                for (int l = 0; l < dim_; ++l) {
                    Scalar lhs(params_), rhs(params_);
                    for (int s = 0; s < dim_; ++s) {
                        lhs += c(i, s, k) * c(j, l, s) - c(j, s, k) * c(i, l, s);
                        rhs += c(i, j, s) * c(s, l, k);
                    }
                    if (lhs != rhs) throw RewriteError("Jacobi identity fails");
                }
    // representation condition
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int g = 0; g < repdim_; ++g)
                for (int a = 0; a < repdim_; ++a) {
                    Scalar lhs(params_), rhs(params_);
                    for (int k = 0; k < dim_; ++k) lhs += c(i, j, k) * A(k, g, a);
                    for (int b = 0; b < repdim_; ++b)
                        rhs += A(i, g, b) * A(j, b, a) - A(j, g, b) * A(i, b, a);
                    if (lhs != rhs)
                        throw RewriteError("representation condition fails");
                }
    if (!parities_.empty()) {
        for (const auto &[key, v] : A_) {
            auto [i, beta, alpha] = key;
            if (!v.is_zero() && parity(alpha) != parity(beta))
                throw RewriteError("representation does not preserve parity");
        }
    }
}

ParamTablePtr lie_param_table() {
    auto t = std::make_shared<ParamTable>();
    t->add("h");
    t->add("k");
    return t;
}

namespace {
Scalar rat(const ParamTablePtr &t, long v) { return Scalar::integer(t, v); }
} // namespace

LieData lie_aff1() {
    auto t = lie_param_table();
    LieData d(2, 2, t);
    d.set_c(0, 1, 1, rat(t, 1)); // [e1, e2] = e2
    // matrix model: e1 = [[1,0],[0,0]], e2 = [[0,1],[0,0]]
    d.set_A(0, 0, 0, rat(t, 1));
    d.set_A(1, 0, 1, rat(t, 1));
    d.validate();
    return d;
}

LieData lie_sl2() {
    auto t = lie_param_table();
    LieData d(3, 2, t);
    // basis e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h
    d.set_c(0, 1, 2, rat(t, 1));
    d.set_c(2, 0, 0, rat(t, 2));
    d.set_c(2, 1, 1, rat(t, -2));
    // fundamental representation
    d.set_A(0, 0, 1, rat(t, 1));  // e f_2 = f_1
    d.set_A(1, 1, 0, rat(t, 1));  // f f_1 = f_2
    d.set_A(2, 0, 0, rat(t, 1));  // h f_1 = f_1
    d.set_A(2, 1, 1, rat(t, -1)); // h f_2 = -f_2
    d.validate();
    return d;
}

LieData lie_gl(int n, const std::vector<int> &parities) {
    auto t = lie_param_table();
    LieData d(n * n, n, t);
    auto id = [n](int i, int j) { return i * n + j; }; // e_{ij}
    // [e_{ia}, e_{jb}] = d_{ja} e_{ib} - d_{ib} e_{ja}
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < n; ++j)
                for (int b = 0; b < n; ++b) {
                    if (id(i, a) >= id(j, b)) continue;
                    if (j == a)
                        d.set_c(id(i, a), id(j, b), id(i, b),
                                d.c(id(i, a), id(j, b), id(i, b)) + rat(t, 1));
                    if (i == b)
                        d.set_c(id(i, a), id(j, b), id(j, a),
                                d.c(id(i, a), id(j, b), id(j, a)) + rat(t, -1));
                }
    // A^b_{ij|a} = d_{ja} d^b_i
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.set_A(id(i, j), i, j, rat(t, 1));
    if (!parities.empty()) d.set_parities(parities);
    d.validate();
    return d;
}

LieData lie_so3() {
    auto t = lie_param_table();
    LieData d(3, 3, t);
    // basis M_12, M_13, M_23 acting on R^3: (M_ij)_{ba} = d_ib d_ja - d_jb d_ia
    const int P[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int m = 0; m < 3; ++m) {
        auto [i, j] = P[m];
        for (int b = 0; b < 3; ++b)
            for (int a = 0; a < 3; ++a) {
                long v = (i == b && j == a ? 1 : 0) - (j == b && i == a ? 1 : 0);
                if (v) d.set_A(m, b, a, rat(t, v));
            }
    }
    // brackets of the canonical basis
    // [M_12, M_13] = -M_23, [M_12, M_23] = M_13, [M_13, M_23] = -M_12
    d.set_c(0, 1, 2, rat(t, -1));
    d.set_c(0, 2, 1, rat(t, 1));
    d.set_c(1, 2, 0, rat(t, -1));
    d.validate();
    return d;
}

ClebschImages clebsch_build(const LieData &data, const Scalar &k_const, bool rescaled) {
    data.validate();
    std::vector<int> parities = data.parities();
    if (parities.empty()) parities.assign(data.repdim(), 0);
    ParamTablePtr table =
        ensure_param(union_tables(data.params(), k_const.table()), "h");
    RewriteSystem sys = clebsch_algebra(parities, table);
    auto sig = sys.sig();
    table = sig->params();
    const int m = data.repdim();
    Scalar hinv = Scalar::param(table, "h", -1);
    Scalar kc = lift_scalar(k_const, table);
    std::vector<Form> e, f;
    for (int i = 0; i < data.dim(); ++i) {
        Form ei(sig);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                Scalar coeff = lift_scalar(data.A(i, b, a), table);
                if (coeff.is_zero()) continue;
                if (!rescaled) coeff *= hinv;
                ei.add_term({static_cast<uint32_t>(m + a), static_cast<uint32_t>(b)},
                            coeff); // F^a G_b
            }
        e.push_back(ei);
    }
    for (int a = 0; a < m; ++a) {
        Scalar coeff = kc;
        if (!rescaled) coeff *= hinv;
        f.push_back(Form::word(sig, {static_cast<uint32_t>(a)}, coeff)); // G_a
    }
    return {std::move(sys), std::move(e), std::move(f)};
}

Report clebsch_verify(const LieData &data, bool rescaled) {
    ParamTablePtr t = ensure_param(ensure_param(data.params(), "h"), "k");
    Scalar kc = Scalar::param(t, "k");
    ClebschImages im = clebsch_build(data, kc, rescaled);
    const auto &sys = im.sys;
    auto sig = sys.sig();
    ParamTablePtr table = sig->params();
    Scalar h = Scalar::param(table, "h");
    Report rep;
    auto comm = [&](const Form &x, const Form &y) { return x * y - y * x; };
    for (int i = 0; i < data.dim(); ++i)
        for (int j = 0; j < data.dim(); ++j) {
            Form want(sig);
            for (int k = 0; k < data.dim(); ++k) {
                Scalar ck = lift_scalar(data.c(i, j, k), table);
                if (rescaled) ck *= h;
                want += im.e[k].scaled(ck);
            }
            Form res = sys.normalize(comm(im.e[i], im.e[j]) - want);
            if (!res.is_zero())
                rep.items.push_back({"[e" + std::to_string(i + 1) + ",e" +
                                         std::to_string(j + 1) + "]",
                                     res.str()});
        }
    for (int i = 0; i < data.dim(); ++i)
        for (int a = 0; a < data.repdim(); ++a) {
            Form want(sig);
            for (int b = 0; b < data.repdim(); ++b) {
                Scalar ab = lift_scalar(data.A(i, b, a), table);
                if (rescaled) ab *= h;
                want += im.f[b].scaled(ab);
            }
            Form res = sys.normalize(comm(im.e[i], im.f[a]) - want);
            if (!res.is_zero())
                rep.items.push_back({"[e" + std::to_string(i + 1) + ",f" +
                                         std::to_string(a + 1) + "]",
                                     res.str()});
        }
    for (int a = 0; a < data.repdim(); ++a)
        for (int b = 0; b < data.repdim(); ++b) {
            int sgn = (data.parity(a) & data.parity(b)) & 1;
            Form fb_fa = im.f[b] * im.f[a];
            Form res = im.f[a] * im.f[b] - (sgn ? -fb_fa : fb_fa);
            res = sys.normalize(res);
            if (!res.is_zero())
                rep.items.push_back({"[f" + std::to_string(a + 1) + ",f" +
                                         std::to_string(b + 1) + "]",
                                     res.str()});
        }
    return rep;
}

} // namespace ncforms
