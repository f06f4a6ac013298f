#include "ncforms/derivation.hpp"

namespace ncforms {

Derivation::Derivation(SignaturePtr sig, int parity, std::vector<Form> values)
    : sig_(std::move(sig)), parity_(parity & 1), values_(std::move(values)) {
    if (values_.size() != sig_->points().size())
        throw SignatureError("derivation needs one value per x-generator");
    for (size_t k = 0; k < values_.size(); ++k) {
        const Form &v = values_[k];
        if (v.is_zero()) continue;
        int want = (parity_ + sig_->gen(sig_->points()[k]).z2) & 1;
        int got = v.homogeneous_z2();
        if (got != want)
            throw SignatureError("value of X(" + sig_->gen(sig_->points()[k]).name +
                                 ") must be parity-homogeneous of parity " +
                                 std::to_string(want));
    }
}

Form Derivation::apply(const Form &a) const {
    std::vector<Form> images(sig_->size(), Form::zero(sig_));
    for (size_t k = 0; k < values_.size(); ++k) {
        uint32_t x = sig_->points()[k];
        images[x] = values_[k];
        int dy = sig_->gen(x).d_partner;
        if (dy >= 0) {
            Form dv = differential(values_[k]);
            images[dy] = parity_ ? -dv : dv;
        }
    }
    return letterwise_derivation(a, images, parity_);
}

Derivation Derivation::bracket(const Derivation &o) const {
    std::vector<Form> vals;
    vals.reserve(values_.size());
    int cross = (parity_ * o.parity_) & 1;
    for (size_t k = 0; k < values_.size(); ++k) {
        Form v = apply(o.values_[k]);
        Form w = o.apply(values_[k]);
        vals.push_back(cross ? v + w : v - w);
    }
    return Derivation(sig_, parity_ + o.parity_, std::move(vals));
}

namespace {

Form contract_word(const Derivation &X, const SignaturePtr &sig, const Word &w,
                   const Scalar &c) {
    if (w.empty()) return Form::zero(sig);
    uint32_t g = w.front();
    const auto &info = sig->gen(g);
    Word rest(w.begin() + 1, w.end());
    int cross = (info.z2 * (X.parity() + 1)) & 1;
    if (info.py == 0) {
        Form inner = contract_word(X, sig, rest, c);
        if (inner.is_zero()) return inner;
        Form out = Form::letter(sig, g) * inner;
        return cross ? -out : out;
    }
    if (info.dx_of < 0)
        throw SignatureError("contraction undefined for generator " + info.name);
    int idx = sig->point_index(info.dx_of);
    Form out = X.value(idx) * Form::word(sig, rest, c);
    Form inner = contract_word(X, sig, rest, c);
    if (!inner.is_zero()) {
        Form tail = Form::letter(sig, g) * inner;
        out = cross ? out - tail : out + tail;
    }
    return out;
}

} // namespace

Form Derivation::contract(const Form &a) const {
    Form out(sig_);
    for (const auto &[w, c] : a.terms()) out += contract_word(*this, sig_, w, c);
    return out;
}

Form d_contract(const Form &a) {
    const auto &sig = *a.sig();
    Form out(a.sig());
    for (const auto &[w, c] : a.terms()) {
        int q = word_py(sig, w);
        if (q != 0) out.add_term(w, c.mul_rational(Rational(q)));
    }
    return out;
}

Form contract_chain(const std::vector<Derivation> &zs, const Form &a) {
    Form r = a;
    for (const auto &z : zs) r = z.contract(r);
    return r;
}

namespace {

int sgn_pow(int e) { return (e & 1) ? -1 : 1; }

std::vector<Derivation> without(const std::vector<Derivation> &zs, size_t skip) {
    std::vector<Derivation> r;
    r.reserve(zs.size() - 1);
    for (size_t i = 0; i < zs.size(); ++i)
        if (i != skip) r.push_back(zs[i]);
    return r;
}

Form signed_form(const Form &f, int s) { return s < 0 ? -f : f; }

} // namespace

Form cartan_residual_ungraded(const std::vector<Derivation> &zs, const Form &a) {
    const size_t l = zs.size();
    Form lhs = contract_chain(zs, differential(a));
    Form rhs(a.sig());
    for (size_t al = 0; al < l; ++al) {
        Form inner = contract_chain(without(zs, al), a);
        rhs += signed_form(zs[al].apply(inner), sgn_pow(al + 2)); // (-1)^{alpha+1}, alpha = al+1
    }
    rhs += signed_form(differential(contract_chain(zs, a)), sgn_pow(l));
    for (size_t al = 0; al < l; ++al) {
        for (size_t be = al + 1; be < l; ++be) {
            std::vector<Derivation> chain;
            chain.push_back(zs[al].bracket(zs[be]));
            for (size_t j = 0; j < l; ++j)
                if (j != al && j != be) chain.push_back(zs[j]);
            rhs += signed_form(contract_chain(chain, a), sgn_pow(al + be + 2));
        }
    }
    return lhs - rhs;
}

Form cartan_residual_graded(const std::vector<Derivation> &zs, const Form &a) {
    const size_t l = zs.size();
    auto p = [&](size_t j) { return zs[j].parity(); };
    Form lhs = contract_chain(zs, differential(a));
    Form rhs(a.sig());
    {
        int e = 0;
        for (size_t j = 0; j < l; ++j) e += p(j) + 1;
        rhs += signed_form(differential(contract_chain(zs, a)), sgn_pow(e));
    }
    for (size_t al = 0; al < l; ++al) {
        int u = 0;
        for (size_t s = 0; s < al; ++s) u += p(s) + 1;
        int tail = 0;
        for (size_t j = al + 1; j < l; ++j) tail += p(j) + 1;
        u += p(al) * tail;
        Form inner = contract_chain(without(zs, al), a);
        rhs += signed_form(zs[al].apply(inner), sgn_pow(u));
    }
    for (size_t al = 0; al < l; ++al) {
        for (size_t be = al + 1; be < l; ++be) {
            int v = 0;
            for (size_t s = 0; s < al; ++s) v += p(s) + 1;
            int mid = 0;
            for (size_t j = al + 1; j < be; ++j) mid += p(j) + 1;
            v += p(al) * (1 + mid);
            // [Z_beta, Z_alpha] replaces Z_beta; Z_alpha is omitted
            std::vector<Derivation> chain;
            for (size_t j = 0; j < l; ++j) {
                if (j == al) continue;
                if (j == be)
                    chain.push_back(zs[be].bracket(zs[al]));
                else
                    chain.push_back(zs[j]);
            }
            rhs += signed_form(contract_chain(chain, a), sgn_pow(v));
        }
    }
    return lhs - rhs;
}

Form cartan_residual(const std::vector<Derivation> &zs, const Form &a) {
    bool all_even = true;
    for (const auto &z : zs)
        if (z.parity()) all_even = false;
    return all_even ? cartan_residual_ungraded(zs, a) : cartan_residual_graded(zs, a);
}

} // namespace ncforms
