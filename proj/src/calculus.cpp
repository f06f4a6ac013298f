#include "ncforms/calculus.hpp"

#include "ncforms/rewrite.hpp"

#include <sstream>

namespace ncforms {

Form letterwise_derivation(const Form &a, const std::vector<Form> &images,
                           int op_parity) {
    const auto &sig = *a.sig();
    Form out(a.sig());
    for (const auto &[w, c] : a.terms()) {
        int prefix_parity = 0;
        for (size_t j = 0; j < w.size(); ++j) {
            const Form &img = images.at(w[j]);
            if (!img.is_zero()) {
                int sign = (op_parity * prefix_parity) & 1;
                for (const auto &[u, s] : img.terms()) {
                    Word nw(w.begin(), w.begin() + j);
                    nw.insert(nw.end(), u.begin(), u.end());
                    nw.insert(nw.end(), w.begin() + j + 1, w.end());
                    Scalar coeff = c * s;
                    out.add_term(nw, sign ? -coeff : coeff);
                }
            }
            prefix_parity = (prefix_parity + sig.gen(w[j]).z2) & 1;
        }
    }
    return out;
}

namespace {
std::vector<Form> link_images(const SignaturePtr &sig) {
    std::vector<Form> imgs;
    imgs.reserve(sig->size());
    for (int s = 0; s < sig->size(); ++s) {
        const auto &g = sig->gen(s);
        imgs.push_back(g.d_partner >= 0 ? Form::letter(sig, g.d_partner)
                                        : Form::zero(sig));
    }
    return imgs;
}
} // namespace

Form differential(const Form &a) {
    return letterwise_derivation(a, link_images(a.sig()), 1);
}

Form differential(const Form &a, const RewriteSystem &sys) {
    return sys.normalize(letterwise_derivation(a, sys.d_images(), 1));
}

ExtendedForm ExtendedForm::from_form(const Form &f, int t_exp, bool tau) {
    ExtendedForm w(f.sig());
    if (tau)
        w.add_minus(t_exp, f);
    else
        w.add_plus(t_exp, f);
    return w;
}

bool ExtendedForm::is_zero() const { return plus_.empty() && minus_.empty(); }

void ExtendedForm::prune() {
    for (auto it = plus_.begin(); it != plus_.end();)
        it = it->second.is_zero() ? plus_.erase(it) : std::next(it);
    for (auto it = minus_.begin(); it != minus_.end();)
        it = it->second.is_zero() ? minus_.erase(it) : std::next(it);
}

void ExtendedForm::add_plus(int m, const Form &f) {
    if (f.is_zero()) return;
    auto it = plus_.find(m);
    if (it == plus_.end())
        plus_.emplace(m, f);
    else {
        it->second += f;
        if (it->second.is_zero()) plus_.erase(it);
    }
}

void ExtendedForm::add_minus(int m, const Form &f) {
    if (f.is_zero()) return;
    auto it = minus_.find(m);
    if (it == minus_.end())
        minus_.emplace(m, f);
    else {
        it->second += f;
        if (it->second.is_zero()) minus_.erase(it);
    }
}

ExtendedForm ExtendedForm::operator+(const ExtendedForm &o) const {
    ExtendedForm r = *this;
    for (const auto &[m, f] : o.plus_) r.add_plus(m, f);
    for (const auto &[m, f] : o.minus_) r.add_minus(m, f);
    return r;
}

ExtendedForm ExtendedForm::operator-(const ExtendedForm &o) const {
    return *this + (-o);
}

ExtendedForm ExtendedForm::operator-() const {
    ExtendedForm r(sig_);
    for (const auto &[m, f] : plus_) r.plus_.emplace(m, -f);
    for (const auto &[m, f] : minus_) r.minus_.emplace(m, -f);
    return r;
}

ExtendedForm ExtendedForm::operator*(const ExtendedForm &o) const {
    // (a+ + tau a-)(b+ + tau b-) = a+b+ + tau((-1)^p(a+) a+ b- + a- b+)
    ExtendedForm r(sig_);
    const auto &sig = *sig_;
    auto cross_sign = [&sig](const Word &w) {
        return word_z2(sig, w) ? -1 : 1;
    };
    for (const auto &[m, f] : plus_) {
        for (const auto &[k, g] : o.plus_) r.add_plus(m + k, f * g);
        for (const auto &[k, g] : o.minus_) r.add_minus(m + k, f.mul_signed(g, cross_sign));
    }
    for (const auto &[m, f] : minus_)
        for (const auto &[k, g] : o.plus_) r.add_minus(m + k, f * g);
    // minus * minus dies on tau^2 = 0
    return r;
}

bool ExtendedForm::operator==(const ExtendedForm &o) const {
    return plus_ == o.plus_ && minus_ == o.minus_;
}

Form ExtendedForm::plus_at_one() const {
    Form r(sig_);
    for (const auto &[m, f] : plus_) r += f;
    return r;
}

Form ExtendedForm::plus_at_zero() const {
    auto it = plus_.find(0);
    return it == plus_.end() ? Form::zero(sig_) : it->second;
}

ExtendedForm ExtendedForm::normalized(const RewriteSystem &sys) const {
    ExtendedForm r(sig_);
    for (const auto &[m, f] : plus_) r.add_plus(m, sys.normalize(f));
    for (const auto &[m, f] : minus_) r.add_minus(m, sys.normalize(f));
    return r;
}

std::string ExtendedForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto piece = [&](int m, const Form &f, bool tau) {
        if (!first) os << " + ";
        first = false;
        if (tau) os << "tau*";
        if (m == 1) os << "t*";
        if (m > 1) os << "t^" << m << "*";
        os << "(" << f.str() << ")";
    };
    for (const auto &[m, f] : plus_) piece(m, f, false);
    for (const auto &[m, f] : minus_) piece(m, f, true);
    return os.str();
}

ExtendedForm differential_ext(const ExtendedForm &w, const std::vector<Form> *images) {
    const SignaturePtr &sig = w.sig();
    std::vector<Form> imgs = images ? *images : std::vector<Form>();
    if (!images) {
        imgs.reserve(sig->size());
        for (int s = 0; s < sig->size(); ++s) {
            const auto &g = sig->gen(s);
            imgs.push_back(g.d_partner >= 0 ? Form::letter(sig, g.d_partner)
                                            : Form::zero(sig));
        }
    }
    ExtendedForm r(sig);
    // d(t^m f) = m t^(m-1) tau f + t^m d(f);  d(t^m tau g) = -t^m tau d(g)
    for (const auto &[m, f] : w.plus()) {
        r.add_plus(m, letterwise_derivation(f, imgs, 1));
        if (m > 0) r.add_minus(m - 1, f.scaled(Rational(m)));
    }
    for (const auto &[m, g] : w.minus())
        r.add_minus(m, -letterwise_derivation(g, imgs, 1));
    return r;
}

ExtendedForm apply_At(const Form &a, const RewriteSystem *sys) {
    const SignaturePtr &sig = a.sig();
    // per-letter images
    std::vector<ExtendedForm> img(sig->size());
    for (int s = 0; s < sig->size(); ++s) {
        const auto &g = sig->gen(s);
        ExtendedForm e(sig);
        if (g.py == 0) {
            e.add_plus(1, Form::letter(sig, s));
        } else if (g.dx_of >= 0) {
            e.add_plus(1, Form::letter(sig, s));
            e.add_minus(0, Form::letter(sig, g.dx_of));
        } else {
            // ghost letters have no homotopy image
            continue;
        }
        img[s] = e;
    }
    ExtendedForm out(sig);
    for (const auto &[w, c] : a.terms()) {
        ExtendedForm prod = ExtendedForm::from_form(Form::scalar(sig, c));
        for (uint32_t g : w) {
            if (img[g].is_zero())
                throw IncompatibleRelationsError("A_t undefined for generator " +
                                                 sig->gen(g).name);
            prod = prod * img[g];
            if (sys) prod = prod.normalized(*sys);
        }
        out = out + prod;
    }
    if (sys) out = out.normalized(*sys);
    return out;
}

Form homotopy_I(const ExtendedForm &w) {
    Form r(w.sig());
    for (const auto &[m, f] : w.minus()) r += f.scaled(Rational(1, m + 1));
    return r;
}

Form homotopy_residual(const ExtendedForm &w, const RewriteSystem *sys) {
    const std::vector<Form> *imgs = sys ? &sys->d_images() : nullptr;
    Form iw = homotopy_I(w);
    Form lhs = sys ? letterwise_derivation(iw, *imgs, 1) : differential(iw);
    lhs += homotopy_I(differential_ext(w, imgs));
    Form rhs = w.plus_at_one() - w.plus_at_zero();
    Form res = lhs - rhs;
    if (sys) res = sys->normalize(res);
    return res;
}

bool at_preserves_relations(const RewriteSystem &sys) {
    for (const auto &[pair, rhs] : sys.rules()) {
        Form lhs = Form::word(sys.sig(), {pair.first, pair.second});
        ExtendedForm img;
        try {
            img = apply_At(lhs - rhs, &sys);
        } catch (const IncompatibleRelationsError &) {
            return false;
        }
        if (!img.is_zero()) return false;
    }
    return true;
}

Primitive poincare_primitive(const Form &a, const RewriteSystem *sys) {
    Form w = a;
    if (sys) {
        if (!at_preserves_relations(*sys))
            throw IncompatibleRelationsError("relations of " + sys->name() +
                                             " are not A_t-stable");
        w = sys->normalize(w);
        if (!differential(w, *sys).is_zero()) throw NotClosedError();
    } else {
        if (!differential(w).is_zero()) throw NotClosedError();
    }
    Form nu = homotopy_I(apply_At(w, sys));
    if (sys) nu = sys->normalize(nu);
    return {nu, w.scalar_part()};
}

} // namespace ncforms
