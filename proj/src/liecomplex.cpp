#include "ncforms/liecomplex.hpp"

#include "ncforms/calculus.hpp"

#include <sstream>

namespace ncforms {

namespace {

std::string idx2(const std::string &base, int a, int b) {
    return base + "[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]";
}

void audit_or_throw(const RewriteSystem &sys) {
    // d raises p_y by exactly 1 and d^2 vanishes on every generator
    const auto &sig = *sys.sig();
    for (int s = 0; s < sig.size(); ++s) {
        const Form &img = sys.d_image(s);
        for (const auto &[w, c] : img.terms())
            if (word_py(sig, w) != sig.gen(s).py + 1)
                throw RewriteError(sys.name() + ": d-image of " + sig.gen(s).name +
                                   " does not raise p_y by 1");
        Form dd = sys.normalize(letterwise_derivation(img, sys.d_images(), 1));
        if (!dd.is_zero())
            throw RewriteError(sys.name() + ": d^2 nonzero on " + sig.gen(s).name);
    }
    Report rep = check_d_compatibility(sys);
    if (!rep.empty())
        throw RewriteError(sys.name() + ": d-compatibility audit failed\n" + rep.str());
}

} // namespace

RewriteSystem general_complex(const LieData &data, bool finite) {
    data.validate();
    const int D = data.dim(), m = data.repdim();
    const auto &params = data.params();
    std::vector<GeneratorInfo> gens;
    gens.reserve(3 * m * m + D);
    auto rho = [&](int a, int b) { return static_cast<uint32_t>(a * m + b); };
    auto w = [&](int a, int b) { return static_cast<uint32_t>(m * m + a * m + b); };
    auto W = [&](int a, int b) { return static_cast<uint32_t>(2 * m * m + a * m + b); };
    auto e = [&](int i) { return static_cast<uint32_t>(3 * m * m + i); };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) gens.push_back({idx2("rho", a, b), 2, 0, -1, -1});
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) gens.push_back({idx2("w", a, b), 1, 1, -1, -1});
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) gens.push_back({idx2("W", a, b), 1, 1, -1, -1});
    for (int i = 0; i < D; ++i)
        gens.push_back({"e" + std::to_string(i + 1), 0, 0, -1, -1});
    auto sig = std::make_shared<const Signature>(std::move(gens), params);
    RewriteSystem sys(sig, std::string("general") + (finite ? "-fin" : ""));

    auto one = [&](uint32_t a, uint32_t b) { return Form::word(sig, {a, b}); };
    // e-e: e_j e_i -> e_i e_j + sum c^k_ji e_k  (j > i)
    for (int j = 0; j < D; ++j)
        for (int i = 0; i < j; ++i) {
            Form rhs = one(e(i), e(j));
            for (int k = 0; k < D; ++k) {
                Scalar ck = data.c(j, i, k);
                if (!ck.is_zero()) rhs.add_term({e(k)}, ck);
            }
            sys.add_rule(e(j), e(i), rhs);
        }
    // e past ghosts
    for (int i = 0; i < D; ++i)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                Form r1 = one(w(a, b), e(i)); // [e_i, w^a_b] = sum A^v_ib w^a_v
                for (int v = 0; v < m; ++v) {
                    Scalar av = data.A(i, v, b);
                    if (!av.is_zero()) r1.add_term({w(a, v)}, av);
                }
                sys.add_rule(e(i), w(a, b), r1);
                Form r2 = one(W(a, b), e(i)); // [e_i, W^a_b] = -sum A^a_iu W^u_b
                for (int u = 0; u < m; ++u) {
                    Scalar au = data.A(i, a, u);
                    if (!au.is_zero()) r2.add_term({W(u, b)}, -au);
                }
                sys.add_rule(e(i), W(a, b), r2);
                sys.add_rule(e(i), rho(a, b), one(rho(a, b), e(i)));
            }
    // odd ghosts among themselves
    auto anti = [&](uint32_t hi, uint32_t lo) { sys.add_rule(hi, lo, -one(lo, hi)); };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            sys.add_rule(w(a, b), w(a, b), Form::zero(sig));
            sys.add_rule(W(a, b), W(a, b), Form::zero(sig));
            for (int c2 = 0; c2 < m; ++c2)
                for (int d2 = 0; d2 < m; ++d2) {
                    if (w(a, b) > w(c2, d2)) anti(w(a, b), w(c2, d2));
                    if (W(a, b) > W(c2, d2)) anti(W(a, b), W(c2, d2));
                    // W^a_b w^c_d = -w^c_d W^a_b - d^a_d rho^c_b
                    Form r = -one(w(c2, d2), W(a, b));
                    if (a == d2) r.add_term({rho(c2, b)}, Scalar::integer(params, -1));
                    sys.add_rule(W(a, b), w(c2, d2), r);
                }
            // ghosts past rho
            for (int c2 = 0; c2 < m; ++c2)
                for (int d2 = 0; d2 < m; ++d2) {
                    sys.add_rule(w(a, b), rho(c2, d2), one(rho(c2, d2), w(a, b)));
                    sys.add_rule(W(a, b), rho(c2, d2), one(rho(c2, d2), W(a, b)));
                    if (rho(a, b) > rho(c2, d2))
                        sys.add_rule(rho(a, b), rho(c2, d2), one(rho(c2, d2), rho(a, b)));
                }
        }
    if (finite) {
        auto kill = [&](uint32_t x, uint32_t y) { sys.set_rule(x, y, Form::zero(sig)); };
        for (int a = 0; a < m; ++a)
            for (int u = 0; u < m; ++u)
                for (int v = 0; v < m; ++v) {
                    kill(w(a, u), w(a, v));     // w^a_u w^a_v = 0
                    kill(W(u, a), W(v, a));     // W^u_a W^v_a = 0
                    kill(w(a, u), rho(a, v));   // w^a_u rho^a_v = 0
                    kill(rho(a, v), w(a, u));
                    kill(W(u, a), rho(v, a));   // W^u_a rho^v_a = 0
                    kill(rho(v, a), W(u, a));
                    kill(rho(a, u), rho(a, v)); // rho^a_u rho^a_v = 0
                    kill(rho(u, a), rho(v, a));
                }
    }
    // d-images
    for (int i = 0; i < D; ++i) {
        Form de(sig);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                Scalar ab = data.A(i, b, a);
                if (ab.is_zero()) continue;
                de.add_term({w(a, b)}, ab);
                de.add_term({W(a, b)}, ab);
            }
        sys.set_d_image(e(i), de);
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            sys.set_d_image(w(a, b), -Form::letter(sig, rho(a, b)));
            sys.set_d_image(W(a, b), Form::letter(sig, rho(a, b)));
        }
    audit_or_throw(sys);
    return sys;
}

namespace {

RewriteSystem ehrenfest_named(const std::vector<std::vector<Scalar>> &A,
                              const std::vector<std::string> &point_names,
                              const std::string &name) {
    const int n = static_cast<int>(A.size());
    ParamTablePtr params = A.empty() ? empty_params() : A[0][0].table();
    // slots: e_1..e_n, eb_1..eb_n, de_1..de_n, deb_1..deb_n
    std::vector<GeneratorInfo> gens(4 * n);
    for (int i = 0; i < n; ++i) {
        gens[i] = {point_names[i], 0, 0, -1, 2 * n + i};
        gens[n + i] = {point_names[n + i], 0, 0, -1, 3 * n + i};
        gens[2 * n + i] = {"d" + point_names[i], 1, 1, i, -1};
        gens[3 * n + i] = {"d" + point_names[n + i], 1, 1, n + i, -1};
    }
    auto sig = std::make_shared<const Signature>(std::move(gens), params);
    RewriteSystem sys(sig, name);
    auto E = [&](int i) { return static_cast<uint32_t>(i); };
    auto B = [&](int i) { return static_cast<uint32_t>(n + i); };
    auto dE = [&](int i) { return static_cast<uint32_t>(2 * n + i); };
    auto dB = [&](int i) { return static_cast<uint32_t>(3 * n + i); };
    auto one = [&](uint32_t a, uint32_t b) { return Form::word(sig, {a, b}); };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (j > i) {
                sys.add_rule(E(j), E(i), one(E(i), E(j)));
                sys.add_rule(B(j), B(i), one(B(i), B(j)));
            }
            // eb_j e_i = e_i eb_j - A_ji eb_j
            Form r = one(E(i), B(j));
            if (!A[j][i].is_zero()) r.add_term({B(j)}, -A[j][i]);
            sys.add_rule(B(j), E(i), r);
            // differentials pass to the right
            sys.add_rule(dE(i), E(j), one(E(j), dE(i)));
            sys.add_rule(dE(i), B(j), one(B(j), dE(i)));
            sys.add_rule(dB(i), B(j), one(B(j), dB(i)));
            Form r2 = one(E(j), dB(i)); // deb_i e_j = e_j deb_i - A_ij deb_i
            if (!A[i][j].is_zero()) r2.add_term({dB(i)}, -A[i][j]);
            sys.add_rule(dB(i), E(j), r2);
        }
    for (uint32_t a = 2 * n; a < static_cast<uint32_t>(4 * n); ++a) {
        sys.add_rule(a, a, Form::zero(sig));
        for (uint32_t b = 2 * n; b < a; ++b) sys.add_rule(a, b, -one(b, a));
    }
    sys.set_normal_transfer_exact(true);
    audit_or_throw(sys);
    return sys;
}

} // namespace

RewriteSystem ehrenfest_complex(const std::vector<std::vector<Scalar>> &A) {
    const int n = static_cast<int>(A.size());
    if (n < 1) throw RewriteError("ehrenfest: need a nonempty matrix");
    for (const auto &row : A)
        if (static_cast<int>(row.size()) != n)
            throw RewriteError("ehrenfest: matrix must be square");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i) names.push_back("eb" + std::to_string(i + 1));
    return ehrenfest_named(A, names, "ehrenfest" + std::to_string(n));
}

RewriteSystem aff1_complex() {
    auto t = empty_params();
    std::vector<std::vector<Scalar>> A{{Scalar::rational(t, 1)}};
    return ehrenfest_named(A, {"e1", "e2"}, "aff1");
}

RewriteSystem gl_complex(int n, GlVariant variant) {
    if (n < 2) throw RewriteError("gl: need n >= 2");
    auto params = empty_params();
    std::vector<GeneratorInfo> gens(2 * n * n);
    auto M = [&](int i, int a) { return static_cast<uint32_t>(i * n + a); };
    auto E = [&](int i, int a) { return static_cast<uint32_t>(n * n + i * n + a); };
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) {
            gens[M(i, a)] = {idx2("de", i, a), 1, 1, static_cast<int>(E(i, a)), -1};
            gens[E(i, a)] = {idx2("e", i, a), 0, 0, -1, static_cast<int>(M(i, a))};
        }
    auto sig = std::make_shared<const Signature>(std::move(gens), params);
    RewriteSystem sys(sig, std::string("gl") + std::to_string(n) +
                               (variant == GlVariant::left ? "L" : "R"));
    auto one = [&](uint32_t a, uint32_t b) { return Form::word(sig, {a, b}); };
    auto unit = Scalar::rational(params, 1);
    // e-e: e_B e_A -> e_A e_B + [e_B, e_A], B > A
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < n; ++j)
                for (int b = 0; b < n; ++b) {
                    if (E(i, a) <= E(j, b)) continue;
                    // [e_ia, e_jb] = d_ja e_ib - d_ib e_ja
                    Form rhs = one(E(j, b), E(i, a));
                    if (j == a) rhs.add_term({E(i, b)}, unit);
                    if (i == b) rhs.add_term({E(j, a)}, -unit);
                    sys.add_rule(E(i, a), E(j, b), rhs);
                }
    // e past differentials
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < n; ++j)
                for (int b = 0; b < n; ++b) {
                    Form rhs = one(M(j, b), E(i, a));
                    if (variant == GlVariant::left) {
                        if (j == a) rhs.add_term({M(i, b)}, unit);
                    } else {
                        if (i == b) rhs.add_term({M(j, a)}, -unit);
                    }
                    sys.add_rule(E(i, a), M(j, b), rhs);
                }
    // differentials anticommute
    for (uint32_t x = 0; x < static_cast<uint32_t>(n * n); ++x) {
        sys.add_rule(x, x, Form::zero(sig));
        for (uint32_t y = 0; y < x; ++y) sys.add_rule(x, y, -one(y, x));
    }
    audit_or_throw(sys);
    return sys;
}

Report gl_involution_check(int n) {
    RewriteSystem L = gl_complex(n, GlVariant::left);
    RewriteSystem R = gl_complex(n, GlVariant::right);
    auto sig = L.sig();
    const int nn = n * n;
    // theta: e[i,a] -> -e[a,i], de[i,b] -> -de[b,i]
    std::vector<std::pair<int, uint32_t>> theta(sig->size());
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) {
            theta[i * n + a] = {-1, static_cast<uint32_t>(a * n + i)};
            theta[nn + i * n + a] = {-1, static_cast<uint32_t>(nn + a * n + i)};
        }
    Report rep;
    auto is_e = [&](uint32_t s) { return s >= static_cast<uint32_t>(nn); };
    for (const auto &[pair, rhs] : L.rules()) {
        auto [a, b] = pair;
        if (is_e(a) && !is_e(b)) {
            // e-M rule: image must be the right-variant rule of the image pair
            uint32_t ia = theta[a].second, ib = theta[b].second;
            const Form *rr = R.rule(ia, ib);
            Form expect = rhs.relabel(theta); // lhs sign (-1)(-1) = +1
            if (!rr || *rr != expect)
                rep.items.push_back({word_str(*sig, {a, b}),
                                     "involution image missing or different"});
        } else {
            const Form *rr = R.rule(a, b);
            if (!rr || *rr != rhs)
                rep.items.push_back({word_str(*sig, {a, b}),
                                     "shared rule differs between variants"});
        }
    }
    if (L.rules().size() != R.rules().size())
        rep.items.push_back({"rule count", "variants have different rule counts"});
    return rep;
}

RewriteSystem so_complex(int n) {
    if (n < 3) throw RewriteError("so: need n >= 3");
    auto params = empty_params();
    const int n_rho = n * (n + 1) / 2, n_th = n * n;
    std::vector<GeneratorInfo> gens;
    gens.reserve(n_rho + n_th + n * (n - 1) / 2);
    std::map<std::pair<int, int>, uint32_t> rho_slot_m, M_slot_m;
    auto th = [&](int i, int a) {
        return static_cast<uint32_t>(n_rho + i * n + a);
    };
    {
        uint32_t s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                rho_slot_m[{i, j}] = s++;
                gens.push_back({idx2("rho", i, j), 2, 0, -1, -1});
            }
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < n; ++a) gens.push_back({idx2("th", i, a), 1, 1, -1, -1});
        s = static_cast<uint32_t>(n_rho + n_th);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                M_slot_m[{i, j}] = s++;
                gens.push_back({idx2("M", i, j), 0, 0, -1, -1});
            }
    }
    auto sig = std::make_shared<const Signature>(std::move(gens), params);
    RewriteSystem sys(sig, "so" + std::to_string(n));
    auto unit = Scalar::rational(params, 1);
    auto rho = [&](int i, int j) { return rho_slot_m.at({std::min(i, j), std::max(i, j)}); };
    auto M_form = [&](int i, int j) {
        if (i == j) return Form::zero(sig);
        if (i < j) return Form::letter(sig, M_slot_m.at({i, j}));
        return -Form::letter(sig, M_slot_m.at({j, i}));
    };
    auto one = [&](uint32_t a, uint32_t b) { return Form::word(sig, {a, b}); };
    auto bracket_MM = [&](int i, int a, int j, int b) {
        // [M_ia, M_jb] = d_ja M_ib - d_ib M_ja - d_ab M_ij - d_ij M_ab
        Form r(sig);
        if (j == a) r += M_form(i, b);
        if (i == b) r -= M_form(j, a);
        if (a == b) r -= M_form(i, j);
        if (i == j) r -= M_form(a, b);
        return r;
    };
    // M-M (canonical pairs i<a, j<b)
    for (const auto &[pa, sa] : M_slot_m)
        for (const auto &[pb, sb] : M_slot_m) {
            if (sa <= sb) continue;
            Form rhs = one(sb, sa) + bracket_MM(pa.first, pa.second, pb.first, pb.second);
            sys.add_rule(sa, sb, rhs);
        }
    // M past theta: M_ia th_jb = th_jb M_ia + d_ab th_ji - d_ib th_ja
    for (const auto &[pa, sa] : M_slot_m) {
        auto [i, a] = pa;
        for (int j = 0; j < n; ++j)
            for (int b = 0; b < n; ++b) {
                Form rhs = one(th(j, b), sa);
                if (a == b) rhs.add_term({th(j, i)}, unit);
                if (i == b) rhs.add_term({th(j, a)}, -unit);
                sys.add_rule(sa, th(j, b), rhs);
            }
        // M past rho
        for (int i2 = 0; i2 < n; ++i2)
            for (int j2 = i2; j2 < n; ++j2)
                sys.add_rule(sa, rho(i2, j2), one(rho(i2, j2), sa));
    }
    // theta-theta: th_A th_B -> -th_B th_A + d_{a1 a2} rho(i2, i1), A > B
    for (int i1 = 0; i1 < n; ++i1)
        for (int a1 = 0; a1 < n; ++a1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int a2 = 0; a2 < n; ++a2) {
                    uint32_t A = th(i1, a1), B = th(i2, a2);
                    if (A < B) continue;
                    if (A == B) {
                        Form rhs = Form::word(sig, {rho(i1, i1)},
                                              Scalar::rational(params, Rational(1, 2)));
                        sys.add_rule(A, A, rhs);
                        continue;
                    }
                    Form rhs = -one(B, A);
                    if (a1 == a2) rhs.add_term({rho(i2, i1)}, unit);
                    sys.add_rule(A, B, rhs);
                }
    // theta past rho, rho-rho order
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = i2; j2 < n; ++j2)
                    sys.add_rule(th(i, a), rho(i2, j2), one(rho(i2, j2), th(i, a)));
    for (const auto &[pa, sa] : rho_slot_m)
        for (const auto &[pb, sb] : rho_slot_m)
            if (sa > sb) sys.add_rule(sa, sb, one(sb, sa));
    // d-images
    for (const auto &[p, s] : M_slot_m) {
        Form img = Form::letter(sig, th(p.first, p.second)) -
                   Form::letter(sig, th(p.second, p.first));
        sys.set_d_image(s, img);
    }
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            sys.set_d_image(th(i, a), Form::letter(sig, rho(i, a)));
    audit_or_throw(sys);
    return sys;
}

RewriteSystem gl_aff_subcomplex(GlVariant variant) {
    auto params = empty_params();
    std::vector<GeneratorInfo> gens(4);
    SignaturePtr sig;
    if (variant == GlVariant::left) {
        // slots: dy, dx, y, x  (normal form r y^.. x^.., differentials left)
        gens[0] = {"dy", 1, 1, 2, -1};
        gens[1] = {"dx", 1, 1, 3, -1};
        gens[2] = {"y", 0, 0, -1, 0};
        gens[3] = {"x", 0, 0, -1, 1};
    } else {
        // slots: dx, dy, x, y  (normal form r x^.. y^..)
        gens[0] = {"dx", 1, 1, 2, -1};
        gens[1] = {"dy", 1, 1, 3, -1};
        gens[2] = {"x", 0, 0, -1, 0};
        gens[3] = {"y", 0, 0, -1, 1};
    }
    sig = std::make_shared<const Signature>(std::move(gens), params);
    RewriteSystem sys(sig, variant == GlVariant::left ? "aff1sub1" : "aff1sub2");
    auto one = [&](std::initializer_list<uint32_t> w) { return Form::word(sig, Word(w)); };
    if (variant == GlVariant::left) {
        const uint32_t dy = 0, dx = 1, y = 2, x = 3;
        sys.add_rule(x, y, one({y, x}) + one({y}));    // [x,y] = y
        sys.add_rule(x, dx, one({dx, x}) + one({dx})); // [x,dx] = dx
        sys.add_rule(x, dy, one({dy, x}) + one({dy})); // [x,dy] = dy
        sys.add_rule(y, dx, one({dx, y}));
        sys.add_rule(y, dy, one({dy, y}));
        sys.add_rule(dx, dx, Form::zero(sig));
        sys.add_rule(dy, dy, Form::zero(sig));
        sys.add_rule(dx, dy, -one({dy, dx}));
    } else {
        const uint32_t dx = 0, dy = 1, x = 2, y = 3;
        sys.add_rule(y, x, one({x, y}) - one({y}));    // y x = x y - y
        sys.add_rule(x, dx, one({dx, x}) - one({dx})); // [dx,x] = dx
        sys.add_rule(y, dx, one({dx, y}) - one({dy})); // [dx,y] = dy
        sys.add_rule(x, dy, one({dy, x}));
        sys.add_rule(y, dy, one({dy, y}));
        sys.add_rule(dx, dx, Form::zero(sig));
        sys.add_rule(dy, dy, Form::zero(sig));
        sys.add_rule(dy, dx, -one({dx, dy}));
    }
    audit_or_throw(sys);
    return sys;
}

GhostlessVerdict sl2_ghostless_check() {
    auto t = std::make_shared<ParamTable>();
    t->add("lambda");
    t->add("mu");
    t->add("nu");
    auto P = [&](const std::string &n) { return Scalar::param(t, n); };
    Scalar zero(t);
    Scalar lam = P("lambda"), mu = P("mu"), nu = P("nu");
    Scalar two = Scalar::integer(t, 2);
    Scalar m[3][3] = {{lam, zero, -nu},
                      {zero, -lam, mu},
                      {-(two * mu), two * nu, zero}};
    Scalar det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return {det, !det.is_zero()};
}

DiscretePoly DiscretePoly::constant(ParamTablePtr params, const Scalar &c) {
    DiscretePoly p(std::move(params));
    p.add_term(0, 0, c);
    return p;
}

DiscretePoly DiscretePoly::monomial(ParamTablePtr params, int deg_y, int deg_x,
                                    const Scalar &c) {
    DiscretePoly p(std::move(params));
    p.add_term(deg_y, deg_x, c);
    return p;
}

bool DiscretePoly::x_only() const {
    for (const auto &[k, c] : terms_)
        if (k.first != 0) return false;
    return true;
}

void DiscretePoly::add_term(int deg_y, int deg_x, const Scalar &c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(deg_y, deg_x);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiscretePoly DiscretePoly::operator+(const DiscretePoly &o) const {
    DiscretePoly r = *this;
    for (const auto &[k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

DiscretePoly DiscretePoly::operator-(const DiscretePoly &o) const {
    DiscretePoly r = *this;
    for (const auto &[k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

DiscretePoly DiscretePoly::operator-() const {
    DiscretePoly r(params_);
    for (const auto &[k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

DiscretePoly DiscretePoly::operator*(const DiscretePoly &o) const {
    DiscretePoly r(params_);
    for (const auto &[k1, c1] : terms_)
        for (const auto &[k2, c2] : o.terms_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

DiscretePoly DiscretePoly::partial_y() const {
    DiscretePoly r(params_);
    for (const auto &[k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c.mul_rational(Rational(k.first)));
    return r;
}

DiscretePoly DiscretePoly::antiderivative_y() const {
    DiscretePoly r(params_);
    for (const auto &[k, c] : terms_)
        r.add_term(k.first + 1, k.second, c.mul_rational(Rational(1, k.first + 1)));
    return r;
}

DiscretePoly DiscretePoly::shift_x(int delta) const {
    DiscretePoly r(params_);
    for (const auto &[k, c] : terms_) {
        // (x + delta)^m by the binomial theorem
        const int mdeg = k.second;
        for (int j = mdeg; j >= 0; --j) {
            Rational dd = 1;
            for (int s = 0; s < mdeg - j; ++s) dd *= delta;
            Rational cb = 1; // C(m, j)
            for (int s = 0; s < mdeg - j; ++s)
                cb = cb * Rational(mdeg - s) / Rational(s + 1);
            Rational coeff = cb * dd;
            if (coeff != 0) r.add_term(k.first, j, c.mul_rational(coeff));
        }
    }
    return r;
}

Scalar DiscretePoly::eval_x(long v) const {
    Scalar out(params_);
    for (const auto &[k, c] : terms_) {
        if (k.first != 0) throw RewriteError("eval_x on a y-dependent polynomial");
        Rational p(1);
        for (int s = 0; s < k.second; ++s) p *= v;
        out += c.mul_rational(p);
    }
    return out;
}

std::string DiscretePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.first) os << "*y^" << k.first;
        if (k.second) os << "*x^" << k.second;
    }
    return os.str();
}

DiscretePoly antidifference_forward(const DiscretePoly &g) {
    if (!g.x_only()) throw RewriteError("antidifference needs an x-only polynomial");
    int deg = 0;
    for (const auto &[k, c] : g.terms()) deg = std::max(deg, k.second);
    // Newton coefficients a_k = (Delta^k g)(0)
    std::vector<Scalar> row;
    for (int t = 0; t <= deg; ++t) row.push_back(g.eval_x(t));
    std::vector<Scalar> a;
    for (int k = 0; k <= deg; ++k) {
        a.push_back(row.front());
        std::vector<Scalar> next;
        for (size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
        row = std::move(next);
    }
    // T = sum a_k binom(x, k+1)
    DiscretePoly T(g.params());
    DiscretePoly binom = DiscretePoly::monomial(g.params(), 0, 1,
                                                Scalar::rational(g.params(), 1)); // binom(x,1)
    for (int k = 0; k <= deg; ++k) {
        // binom now holds binom(x, k+1)
        for (const auto &[key, c] : binom.terms())
            T.add_term(0, key.second, c * a[k]);
        // binom(x, k+2) = binom(x, k+1) (x - (k+1)) / (k+2)
        DiscretePoly lin(g.params());
        lin.add_term(0, 1, Scalar::rational(g.params(), 1));
        lin.add_term(0, 0, Scalar::rational(g.params(), Rational(-(k + 1))));
        DiscretePoly nb = binom * lin;
        DiscretePoly scaled(g.params());
        for (const auto &[key, c] : nb.terms())
            scaled.add_term(key.first, key.second, c.mul_rational(Rational(1, k + 2)));
        binom = scaled;
    }
    return T;
}

DiscreteOneForm discrete_d(const DiscretePoly &f, int variant) {
    if (variant == 1) {
        return {f.partial_y(), f.shift_x(1) - f};
    }
    if (variant == 2) {
        return {f.partial_y(), f - f.shift_x(-1)};
    }
    throw RewriteError("variant must be 1 or 2");
}

DiscretePoly discrete_poincare(const DiscreteOneForm &w, int variant) {
    const DiscretePoly &a = variant == 1 ? w.dy_coeff : w.dx_coeff;
    const DiscretePoly &b = variant == 1 ? w.dx_coeff : w.dy_coeff;
    if (variant == 1) {
        // omega = dy a + dx b, closed iff a(y,x+1) - a(y,x) = b_y
        if (a.shift_x(1) - a != b.partial_y()) throw NotClosedError();
        DiscretePoly F = a.antiderivative_y();
        DiscretePoly G = b - (F.shift_x(1) - F);
        if (!G.x_only()) throw NotClosedError();
        return F + antidifference_forward(G);
    }
    if (variant == 2) {
        // omega = dx a + dy b, closed iff a_y = b(x,y) - b(x-1,y)
        if (a.partial_y() != b - b.shift_x(-1)) throw NotClosedError();
        DiscretePoly F = b.antiderivative_y();
        DiscretePoly G = a - (F - F.shift_x(-1));
        if (!G.x_only()) throw NotClosedError();
        // solve H(x) - H(x-1) = G(x)
        return F + antidifference_forward(G.shift_x(1));
    }
    throw RewriteError("variant must be 1 or 2");
}

} // namespace ncforms
