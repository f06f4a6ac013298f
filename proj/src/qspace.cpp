#include "ncforms/qspace.hpp"

#include <sstream>

namespace ncforms {

QMatrix::QMatrix(int n, ParamTablePtr params)
    : n_(n), params_(params ? std::move(params) : empty_params()) {
    if (n < 1) throw RewriteError("QMatrix: need n >= 1");
}

QMatrix QMatrix::symbolic(int n) {
    auto t = std::make_shared<ParamTable>();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::string a = "Q[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
            std::string b = "Q[" + std::to_string(j + 1) + "," + std::to_string(i + 1) + "]";
            t->add(a, b);
        }
    QMatrix m(n, t);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m.entries_[{i, j}] = Scalar::param(
                t, "Q[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
    return m;
}

void QMatrix::set(int i, int j, const Scalar &v) {
    if (i == j) throw RewriteError("Q_ii is fixed to 1");
    if (i < j)
        entries_[{i, j}] = v;
    else
        entries_[{j, i}] = v.monomial_inverse();
}

Scalar QMatrix::q(int i, int j) const {
    if (i == j) return Scalar::rational(params_, 1);
    auto it = entries_.find({std::min(i, j), std::max(i, j)});
    if (it == entries_.end()) return Scalar::rational(params_, 1);
    return i < j ? it->second : it->second.monomial_inverse();
}

RewriteSystem q_algebra(const QMatrix &Q) {
    const int n = Q.n();
    // slots: dx1..dxn, x1..xn
    std::vector<GeneratorInfo> gens(2 * n);
    for (int i = 0; i < n; ++i) {
        std::string s = std::to_string(i + 1);
        gens[i] = {"dx" + s, 1, 1, n + i, -1};
        gens[n + i] = {"x" + s, 0, 0, -1, i};
    }
    auto sig = std::make_shared<const Signature>(std::move(gens), Q.params());
    RewriteSystem sys(sig, "qspace" + std::to_string(n));
    auto dx = [&](int i) { return static_cast<uint32_t>(i); };
    auto x = [&](int i) { return static_cast<uint32_t>(n + i); };
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            // x_j x_i -> Q_ji x_i x_j for j > i (Q_ji = Q_ij^-1)
            if (j > i)
                sys.add_rule(x(j), x(i),
                             Form::word(sig, {x(i), x(j)}, Q.q(j, i)));
            // x_j dx_i -> Q_ji dx_i x_j
            sys.add_rule(x(j), dx(i), Form::word(sig, {dx(i), x(j)}, Q.q(j, i)));
            // dx_j dx_i -> -Q_ji dx_i dx_j for j > i; squares vanish
            if (j > i)
                sys.add_rule(dx(j), dx(i),
                             Form::word(sig, {dx(i), dx(j)}, -Q.q(j, i)));
        }
        sys.add_rule(dx(j), dx(j), Form::zero(sig));
    }
    return sys;
}

namespace {

Form q_partial_word(const SignaturePtr &sig, const Word &w, const Scalar &c, int k,
                    const QMatrix &Q) {
    // d/dx_k (x_i w) = d_ik w + Q_ik x_i d/dx_k(w)
    if (w.empty()) return Form::zero(sig);
    uint32_t head = w.front();
    const auto &g = sig->gen(head);
    if (g.py != 0) throw RewriteError("q_partial expects a 0-form");
    int i = sig->point_index(head);
    Word rest(w.begin() + 1, w.end());
    Form out(sig);
    if (i == k) out.add_term(rest, c);
    Form tail = q_partial_word(sig, rest, c * Q.q(i, k), k, Q);
    if (!tail.is_zero()) out += Form::letter(sig, head) * tail;
    return out;
}

} // namespace

Form q_partial_free(const Form &H, int k, const QMatrix &Q) {
    Form out(H.sig());
    for (const auto &[w, c] : H.terms()) out += q_partial_word(H.sig(), w, c, k, Q);
    return out;
}

Form q_partial(const Form &H, int k, const RewriteSystem &sys, const QMatrix &Q) {
    return sys.normalize(q_partial_free(sys.normalize(H), k, Q));
}

Form q_d_check(const Form &H, const RewriteSystem &sys, const QMatrix &Q) {
    const auto &sig = sys.sig();
    Form lhs = differential(sys.normalize(H), sys);
    Form rhs(sig);
    for (int k = 0; k < Q.n(); ++k) {
        uint32_t dxk = sig->gen(sig->points()[k]).d_partner;
        rhs += Form::letter(sig, dxk) * q_partial(H, k, sys, Q);
    }
    return sys.normalize(lhs - rhs);
}

GroupIndex::GroupIndex(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw RewriteError("group needs at least one factor");
    order_ = 1;
    for (int m : moduli_) {
        if (m < 1) throw RewriteError("group moduli must be positive");
        order_ *= m;
    }
}

GroupIndex::Elem GroupIndex::add(const Elem &a, const Elem &b) const {
    Elem r(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) r[i] = (a[i] + b[i]) % moduli_[i];
    return r;
}

GroupIndex::Elem GroupIndex::neg(const Elem &a) const {
    Elem r(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) r[i] = (moduli_[i] - a[i]) % moduli_[i];
    return r;
}

int GroupIndex::flat(const Elem &a) const {
    int v = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) v = v * moduli_[i] + a[i];
    return v;
}

GroupIndex::Elem GroupIndex::unflat(int v) const {
    Elem r(moduli_.size());
    for (size_t i = moduli_.size(); i-- > 0;) {
        r[i] = v % moduli_[i];
        v /= moduli_[i];
    }
    return r;
}

std::vector<GroupIndex::Elem> GroupIndex::elements() const {
    std::vector<Elem> out;
    out.reserve(order_);
    for (int v = 0; v < order_; ++v) out.push_back(unflat(v));
    return out;
}

std::string GroupIndex::str(const Elem &a) const {
    if (moduli_.size() == 1) return std::to_string(a[0]);
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

GroupQMatrix::GroupQMatrix(int n, GroupIndex group, ParamTablePtr params)
    : n_(n), group_(std::move(group)),
      params_(params ? std::move(params) : empty_params()) {
    if (n < 1) throw RewriteError("GroupQMatrix: need n >= 1");
}

std::tuple<int, int, int, bool> GroupQMatrix::canonical(int i, int j, int gflat) const {
    int ginv = group_.flat(group_.neg(group_.unflat(gflat)));
    std::tuple<int, int, int> a{i, j, gflat}, b{j, i, ginv};
    if (a <= b) return {i, j, gflat, false};
    return {j, i, ginv, true};
}

GroupQMatrix GroupQMatrix::symbolic(int n, GroupIndex group) {
    auto t = std::make_shared<ParamTable>();
    GroupQMatrix m(n, group, nullptr);
    auto name = [&](int i, int j, int g) {
        return "Q[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ";" +
               group.str(group.unflat(g)) + "]";
    };
    std::map<std::tuple<int, int, int>, Scalar> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int g = 0; g < group.order(); ++g) {
                auto [ci, cj, cg, flip] = m.canonical(i, j, g);
                if (flip) continue; // handled from the canonical side
                std::tuple<int, int, int> self{ci, cj, cg};
                int ginv = group.flat(group.neg(group.unflat(cg)));
                if (ci == cj && cg == ginv) continue; // self-inverse: constant 1
                if (entries.count(self)) continue;
                t->add(name(ci, cj, cg), name(cj, ci, ginv));
                entries[self] = Scalar(); // placeholder, rebuilt below
            }
    GroupQMatrix out(n, group, t);
    for (const auto &[key, unused] : entries) {
        auto [i, j, g] = key;
        out.entries_[key] = Scalar::param(t, name(i, j, g));
    }
    return out;
}

void GroupQMatrix::set(int i, int j, const GroupIndex::Elem &g, const Scalar &v) {
    auto [ci, cj, cg, flip] = canonical(i, j, group_.flat(g));
    int ginv = group_.flat(group_.neg(group_.unflat(cg)));
    if (ci == cj && cg == ginv) {
        if (!(v.is_one())) throw RewriteError("self-inverse Q entry must be 1");
        return;
    }
    entries_[{ci, cj, cg}] = flip ? v.monomial_inverse() : v;
}

Scalar GroupQMatrix::q(int i, int j, const GroupIndex::Elem &g) const {
    auto [ci, cj, cg, flip] = canonical(i, j, group_.flat(g));
    auto it = entries_.find({ci, cj, cg});
    if (it == entries_.end()) return Scalar::rational(params_, 1);
    return flip ? it->second.monomial_inverse() : it->second;
}

GroupedQSystem::GroupedQSystem(RewriteSystem sys, GroupIndex group, int n)
    : sys_(std::move(sys)), group_(std::move(group)), n_(n) {}

uint32_t GroupedQSystem::x_slot(int i, int gflat) const {
    return static_cast<uint32_t>(n_ * group_.order() + i * group_.order() + gflat);
}

uint32_t GroupedQSystem::dx_slot(int i, int gflat) const {
    return static_cast<uint32_t>(i * group_.order() + gflat);
}

Form GroupedQSystem::act(const GroupIndex::Elem &h, const Form &a) const {
    std::vector<std::pair<int, uint32_t>> images(sys_.sig()->size());
    for (int i = 0; i < n_; ++i)
        for (int g = 0; g < group_.order(); ++g) {
            int hg = group_.flat(group_.add(h, group_.unflat(g)));
            images[dx_slot(i, g)] = {1, dx_slot(i, hg)};
            images[x_slot(i, g)] = {1, x_slot(i, hg)};
        }
    return a.relabel(images);
}

ExtendedForm GroupedQSystem::act(const GroupIndex::Elem &h, const ExtendedForm &a) const {
    ExtendedForm r(a.sig());
    for (const auto &[m, f] : a.plus()) r.add_plus(m, act(h, f));
    for (const auto &[m, f] : a.minus()) r.add_minus(m, act(h, f));
    return r;
}

bool GroupedQSystem::equivalent(const Form &a, const Form &b) const {
    Form nb = sys_.normalize(b);
    for (const auto &g : group_.elements())
        if (sys_.normalize(act(g, a)) == nb) return true;
    return false;
}

GroupedQSystem group_algebra(const GroupQMatrix &Q) {
    const int n = Q.n();
    const GroupIndex &G = Q.group();
    const int m = G.order();
    std::vector<GeneratorInfo> gens(2 * n * m);
    auto label = [&](int i, int g) {
        std::string s = "x" + std::to_string(i + 1);
        return s + "@" + G.str(G.unflat(g));
    };
    for (int i = 0; i < n; ++i)
        for (int g = 0; g < m; ++g) {
            int d = i * m + g, x = n * m + i * m + g;
            gens[d] = {"d" + label(i, g), 1, 1, x, -1};
            gens[x] = {label(i, g), 0, 0, -1, d};
        }
    auto sig = std::make_shared<const Signature>(std::move(gens), Q.params());
    RewriteSystem sys(sig, "qgroup");
    auto dx = [&](int i, int g) { return static_cast<uint32_t>(i * m + g); };
    auto x = [&](int i, int g) { return static_cast<uint32_t>(n * m + i * m + g); };
    // x_A x_B = Q_{A.i,B.i}^(A.g^-1 B.g) x_B x_A, applied to out-of-order pairs
    auto qc = [&](int ia, int ga, int ib, int gb) {
        auto rel = G.add(G.neg(G.unflat(ga)), G.unflat(gb));
        return Q.q(ia, ib, rel);
    };
    for (int ia = 0; ia < n; ++ia)
        for (int ga = 0; ga < m; ++ga)
            for (int ib = 0; ib < n; ++ib)
                for (int gb = 0; gb < m; ++gb) {
                    uint32_t xa = x(ia, ga), xb = x(ib, gb);
                    uint32_t da = dx(ia, ga), db = dx(ib, gb);
                    if (xa > xb)
                        sys.add_rule(xa, xb,
                                     Form::word(sig, {xb, xa}, qc(ia, ga, ib, gb)));
                    // point past differential, any pair
                    sys.add_rule(xa, db,
                                 Form::word(sig, {db, xa}, qc(ia, ga, ib, gb)));
                    if (da > db)
                        sys.add_rule(da, db,
                                     Form::word(sig, {db, da}, -qc(ia, ga, ib, gb)));
                    if (da == db) sys.add_rule(da, da, Form::zero(sig));
                }
    return GroupedQSystem(std::move(sys), G, n);
}

Form equivariant_primitive(const Form &w, const GroupedQSystem &gs) {
    return gs.sys().normalize(homotopy_I(apply_At(w, &gs.sys())));
}

} // namespace ncforms
