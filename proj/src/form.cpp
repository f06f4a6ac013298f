#include "ncforms/form.hpp"

#include <algorithm>
#include <sstream>

namespace ncforms {

int word_z2(const Signature &sig, const Word &w) {
    int p = 0;
    for (uint32_t g : w) p += sig.gen(g).z2;
    return p & 1;
}

int word_py(const Signature &sig, const Word &w) {
    int p = 0;
    for (uint32_t g : w) p += sig.gen(g).py;
    return p;
}

int word_px(const Signature &sig, const Word &w) {
    int p = 0;
    for (uint32_t g : w)
        if (sig.gen(g).py == 0) ++p;
    return p;
}

Form Form::scalar(SignaturePtr sig, const Scalar &c) {
    Form f(std::move(sig));
    f.add_term({}, c);
    return f;
}

Form Form::word(SignaturePtr sig, const Word &w, const Scalar &c) {
    Form f(std::move(sig));
    f.add_term(w, c);
    return f;
}

Form Form::word(SignaturePtr sig, const Word &w) {
    auto one = Scalar::rational(sig->params(), 1);
    return word(std::move(sig), w, one);
}

Form Form::letter(SignaturePtr sig, uint32_t slot) {
    return word(std::move(sig), Word{slot});
}

Form Form::one(SignaturePtr sig) {
    auto c = Scalar::rational(sig->params(), 1);
    return scalar(std::move(sig), c);
}

void Form::check_same_sig(const Form &o) const {
    if (sig_ == o.sig_) return;
    if (!sig_ || !o.sig_ || *sig_ != *o.sig_)
        throw SignatureError("signature mismatch");
}

void Form::add_term(const Word &w, const Scalar &c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Form Form::operator+(const Form &o) const {
    check_same_sig(o);
    Form r = *this;
    for (const auto &[w, c] : o.terms_) r.add_term(w, c);
    return r;
}

Form &Form::operator+=(const Form &o) {
    check_same_sig(o);
    for (const auto &[w, c] : o.terms_) add_term(w, c);
    return *this;
}

Form &Form::operator-=(const Form &o) {
    check_same_sig(o);
    for (const auto &[w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Form Form::operator-(const Form &o) const {
    check_same_sig(o);
    Form r = *this;
    for (const auto &[w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

Form Form::operator-() const {
    Form r(sig_);
    for (const auto &[w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

Form Form::operator*(const Form &o) const {
    check_same_sig(o);
    Form r(sig_);
    for (const auto &[w1, c1] : terms_) {
        for (const auto &[w2, c2] : o.terms_) {
            Word w(w1);
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    }
    return r;
}

Form Form::mul_signed(const Form &o, const std::function<int(const Word &)> &sign) const {
    check_same_sig(o);
    Form r(sig_);
    for (const auto &[w1, c1] : terms_) {
        int s = sign(w1);
        for (const auto &[w2, c2] : o.terms_) {
            Word w(w1);
            w.insert(w.end(), w2.begin(), w2.end());
            Scalar c = c1 * c2;
            r.add_term(w, s < 0 ? -c : c);
        }
    }
    return r;
}

Form Form::scaled(const Scalar &c) const {
    Form r(sig_);
    for (const auto &[w, k] : terms_) r.add_term(w, k * c);
    return r;
}

Form Form::scaled(const Rational &q) const {
    Form r(sig_);
    for (const auto &[w, k] : terms_) r.add_term(w, k.mul_rational(q));
    return r;
}

bool Form::operator==(const Form &o) const {
    check_same_sig(o);
    return terms_ == o.terms_;
}

std::map<std::pair<int, int>, Form> Form::bigrade() const {
    std::map<std::pair<int, int>, Form> out;
    for (const auto &[w, c] : terms_) {
        auto key = std::make_pair(word_px(*sig_, w), word_py(*sig_, w));
        auto it = out.find(key);
        if (it == out.end()) it = out.emplace(key, Form(sig_)).first;
        it->second.add_term(w, c);
    }
    return out;
}

int Form::homogeneous_z2() const {
    int p = -2;
    for (const auto &[w, c] : terms_) {
        int q = word_z2(*sig_, w);
        if (p == -2)
            p = q;
        else if (p != q)
            return -1;
    }
    return p == -2 ? 0 : p;
}

int Form::max_py() const {
    int m = 0;
    for (const auto &[w, c] : terms_) m = std::max(m, word_py(*sig_, w));
    return m;
}

Scalar Form::scalar_part() const {
    auto it = terms_.find(Word{});
    if (it == terms_.end()) return Scalar(sig_ ? sig_->params() : empty_params());
    return it->second;
}

Form Form::without_scalar_part() const {
    Form r = *this;
    r.terms_.erase(Word{});
    return r;
}

Form Form::relabel(const std::vector<std::pair<int, uint32_t>> &images) const {
    Form r(sig_);
    for (const auto &[w, c] : terms_) {
        Word nw;
        nw.reserve(w.size());
        int s = 1;
        for (uint32_t g : w) {
            const auto &[sg, ng] = images.at(g);
            s *= sg;
            nw.push_back(ng);
        }
        r.add_term(nw, s < 0 ? -c : c);
    }
    return r;
}

std::string word_str(const Signature &sig, const Word &w) {
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) os << "*";
        os << sig.gen(w[i]).name;
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    // words ascending by (length, lex); the pure scalar term prints last
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Word &w, const Scalar &c) {
        bool neg = false;
        Scalar a = c;
        if (a.terms().size() == 1 && a.terms().begin()->second < 0) {
            neg = true;
            a = -a;
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (w.empty()) {
            os << (a.terms().size() > 1 ? "(" + a.str() + ")" : a.str());
            return;
        }
        if (a.is_one()) {
            os << word_str(*sig_, w);
            return;
        }
        if (a.terms().size() > 1)
            os << "(" << a.str() << ")";
        else
            os << a.str();
        os << "*" << word_str(*sig_, w);
    };
    for (const auto &[w, c] : terms_) {
        if (w.empty()) continue;
        emit(w, c);
    }
    auto it = terms_.find(Word{});
    if (it != terms_.end()) emit(it->first, it->second);
    return os.str();
}

} // namespace ncforms
