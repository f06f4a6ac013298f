#include "ncforms/rewrite.hpp"

#include "ncforms/calculus.hpp"

#include <array>
#include <sstream>

namespace ncforms {

RewriteSystem::RewriteSystem(SignaturePtr sig, std::string name)
    : sig_(std::move(sig)), name_(std::move(name)) {
    d_images_.reserve(sig_->size());
    for (int s = 0; s < sig_->size(); ++s) {
        const auto &g = sig_->gen(s);
        if (g.d_partner >= 0)
            d_images_.push_back(Form::letter(sig_, g.d_partner));
        else
            d_images_.push_back(Form::zero(sig_));
    }
}

std::array<long, 3> RewriteSystem::measure(const Word &w) const {
    long inv = 0, rank = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        rank += w[i];
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    }
    return {static_cast<long>(w.size()), inv, rank};
}

void RewriteSystem::check_decreasing(uint32_t a, uint32_t b, const Form &rhs) const {
    auto lhs = measure({a, b});
    for (const auto &[w, c] : rhs.terms()) {
        if (measure(w) >= lhs) {
            throw RewriteError("rule " + word_str(*sig_, {a, b}) + " -> " + rhs.str() +
                               " does not decrease the termination measure");
        }
    }
}

void RewriteSystem::add_rule(uint32_t a, uint32_t b, const Form &rhs) {
    if (rules_.count({a, b}))
        throw RewriteError("duplicate rule for pair " + word_str(*sig_, {a, b}));
    set_rule(a, b, rhs);
}

void RewriteSystem::set_rule(uint32_t a, uint32_t b, const Form &rhs) {
    check_decreasing(a, b, rhs);
    rules_[{a, b}] = rhs;
}

const Form *RewriteSystem::rule(uint32_t a, uint32_t b) const {
    auto it = rules_.find({a, b});
    return it == rules_.end() ? nullptr : &it->second;
}

void RewriteSystem::set_d_image(uint32_t slot, const Form &img) {
    d_images_.at(slot) = img;
}

Form RewriteSystem::normalize(const Form &a, Strategy st) const {
    Form out(sig_);
    if (rules_.empty()) return a;
    std::vector<std::pair<Word, Scalar>> stack(a.terms().begin(), a.terms().end());
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        int pos = -1;
        if (st == Strategy::leftmost) {
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (rules_.count({w[i], w[i + 1]})) {
                    pos = static_cast<int>(i);
                    break;
                }
        } else {
            for (size_t i = w.size(); i-- > 1;)
                if (rules_.count({w[i - 1], w[i]})) {
                    pos = static_cast<int>(i - 1);
                    break;
                }
        }
        if (pos < 0) {
            out.add_term(w, c);
            continue;
        }
        const Form &rhs = rules_.at({w[pos], w[pos + 1]});
        for (const auto &[u, s] : rhs.terms()) {
            Word nw(w.begin(), w.begin() + pos);
            nw.insert(nw.end(), u.begin(), u.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            stack.emplace_back(std::move(nw), c * s);
        }
    }
    return out;
}

RewriteSystem RewriteSystem::quadratic_shadow() const {
    RewriteSystem s(sig_, name_ + "-shadow");
    for (const auto &[pair, rhs] : rules_) {
        Form lead(sig_);
        for (const auto &[w, c] : rhs.terms())
            if (w.size() == 2) lead.add_term(w, c);
        s.rules_[pair] = lead;
    }
    s.d_images_ = d_images_;
    return s;
}

std::vector<Word> RewriteSystem::normal_words(const std::vector<uint32_t> &slots,
                                              int max_len) const {
    std::vector<Word> out{{}};
    std::vector<Word> layer{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto &w : layer) {
            for (uint32_t s : slots) {
                if (!w.empty() && rules_.count({w.back(), s})) continue;
                Word nw(w);
                nw.push_back(s);
                next.push_back(nw);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::string Report::str() const {
    std::ostringstream os;
    for (const auto &it : items) os << it.what << ": " << it.detail << "\n";
    return os.str();
}

Report check_local_confluence(const RewriteSystem &sys, int max_degree) {
    if (max_degree < 3) throw RewriteError("max_degree must be >= 3");
    Report rep;
    const auto &sig = *sys.sig();
    const int n = sig.size();
    for (uint32_t a = 0; a < static_cast<uint32_t>(n); ++a) {
        for (uint32_t b = 0; b < static_cast<uint32_t>(n); ++b) {
            if (!sys.rule(a, b)) continue;
            for (uint32_t c = 0; c < static_cast<uint32_t>(n); ++c) {
                if (!sys.rule(b, c)) continue;
                Form w = Form::word(sys.sig(), {a, b, c});
                Form left = sys.rule(a, b)->operator*(Form::letter(sys.sig(), c));
                Form right = Form::letter(sys.sig(), a) * *sys.rule(b, c);
                Form n1 = sys.normalize(left);
                Form n2 = sys.normalize(right);
                if (n1 != n2) {
                    rep.items.push_back({word_str(sig, {a, b, c}),
                                         "left " + n1.str() + " vs right " + n2.str()});
                }
            }
        }
    }
    return rep;
}

Report check_d_compatibility(const RewriteSystem &sys) {
    Report rep;
    const auto &sig = *sys.sig();
    for (const auto &[pair, rhs] : sys.rules()) {
        Form lhs = Form::word(sys.sig(), {pair.first, pair.second});
        Form dl = letterwise_derivation(lhs, sys.d_images(), 1);
        Form dr = letterwise_derivation(rhs, sys.d_images(), 1);
        Form res = sys.normalize(dl - dr);
        if (!res.is_zero()) {
            rep.items.push_back({word_str(sig, {pair.first, pair.second}) + " -> " + rhs.str(),
                                 "d-residual " + res.str()});
        }
    }
    return rep;
}

} // namespace ncforms
