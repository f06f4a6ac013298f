#include "ncforms/scalar.hpp"

#include <sstream>

namespace ncforms {

void ParamTable::add(const std::string &name, const std::string &inverse_name) {
    if (name.empty()) throw ScalarError("parameter name must be nonempty");
    if (lookup_.count(name)) throw ScalarError("duplicate parameter name: " + name);
    if (name == inverse_name)
        throw ScalarError("parameter cannot be its own inverse: " + name);
    if (!inverse_name.empty() && lookup_.count(inverse_name))
        throw ScalarError("duplicate parameter name: " + inverse_name);
    int slot = static_cast<int>(entries_.size());
    entries_.push_back({name, inverse_name});
    lookup_[name] = {slot, +1};
    if (!inverse_name.empty()) lookup_[inverse_name] = {slot, -1};
}

std::optional<std::pair<int, int>> ParamTable::resolve(const std::string &name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

bool ParamTable::operator==(const ParamTable &o) const {
    if (entries_.size() != o.entries_.size()) return false;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].name != o.entries_[i].name ||
            entries_[i].inverse_name != o.entries_[i].inverse_name)
            return false;
    return true;
}

ParamTablePtr empty_params() {
    static const auto t = std::make_shared<const ParamTable>();
    return t;
}

ParamTablePtr single_param(const std::string &name) {
    auto t = std::make_shared<ParamTable>();
    t->add(name);
    return t;
}

Scalar Scalar::rational(ParamTablePtr table, const Rational &q) {
    Scalar s(std::move(table));
    if (q != 0) s.terms_[Exponents(s.table_->size(), 0)] = q;
    return s;
}

Scalar Scalar::param(ParamTablePtr table, const std::string &name, int exp,
                     const Rational &c) {
    Scalar s(std::move(table));
    if (c == 0) return s;
    auto r = s.table_->resolve(name);
    if (!r) throw ScalarError("unknown parameter: " + name);
    Exponents e(s.table_->size(), 0);
    e[r->first] = exp * r->second;
    s.terms_[e] = c;
    return s;
}

bool Scalar::is_one() const {
    if (terms_.size() != 1) return false;
    const auto &[e, c] = *terms_.begin();
    if (c != 1) return false;
    for (int v : e)
        if (v != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (const auto &[e, c] : terms_)
        for (int v : e)
            if (v != 0) return false;
    return true;
}

std::optional<Rational> Scalar::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1 || !is_rational()) return std::nullopt;
    return terms_.begin()->second;
}

void Scalar::check_same_table(const Scalar &o) const {
    if (table_ == o.table_) return;
    if (*table_ != *o.table_) throw ScalarError("parameter-table mismatch");
}

void Scalar::add_term(const Exponents &e, const Rational &c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Scalar Scalar::operator+(const Scalar &o) const {
    check_same_table(o);
    Scalar r = *this;
    for (const auto &[e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Scalar Scalar::operator-(const Scalar &o) const {
    check_same_table(o);
    Scalar r = *this;
    for (const auto &[e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(table_);
    for (const auto &[e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Scalar Scalar::operator*(const Scalar &o) const {
    check_same_table(o);
    Scalar r(table_);
    for (const auto &[e1, c1] : terms_) {
        for (const auto &[e2, c2] : o.terms_) {
            Exponents e(e1);
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Scalar Scalar::mul_rational(const Rational &q) const {
    Scalar r(table_);
    if (q == 0) return r;
    for (const auto &[e, c] : terms_) r.terms_.emplace(e, c * q);
    return r;
}

Scalar Scalar::monomial_inverse() const {
    if (terms_.size() != 1)
        throw ScalarError("only monomial Scalars are invertible");
    const auto &[e, c] = *terms_.begin();
    Scalar r(table_);
    Exponents ei(e);
    for (int &v : ei) v = -v;
    r.terms_.emplace(ei, Rational(1) / c);
    return r;
}

Scalar Scalar::substitute(const std::map<std::string, Rational> &values) const {
    std::vector<std::optional<Rational>> sub(table_->size());
    for (const auto &[name, v] : values) {
        auto r = table_->resolve(name);
        if (!r) throw ScalarError("unknown parameter: " + name);
        if (r->second < 0)
            sub[r->first] = Rational(1) / v;
        else
            sub[r->first] = v;
    }
    Scalar out(table_);
    for (const auto &[e, c] : terms_) {
        Rational coeff = c;
        Exponents rest(e);
        for (size_t i = 0; i < e.size(); ++i) {
            if (!sub[i] || e[i] == 0) continue;
            Rational v = *sub[i];
            if (v == 0 && e[i] < 0) throw ScalarError("division by zero in substitute");
            int k = e[i];
            if (k < 0) {
                v = Rational(1) / v;
                k = -k;
            }
            for (int s = 0; s < k; ++s) coeff *= v;
            rest[i] = 0;
        }
        out.add_term(rest, coeff);
    }
    return out;
}

bool Scalar::operator==(const Scalar &o) const {
    check_same_table(o);
    return terms_ == o.terms_;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_params = false;
        for (int v : e)
            if (v != 0) has_params = true;
        if (!has_params) {
            os << to_string(a);
            continue;
        }
        bool printed = false;
        if (a != 1) {
            os << to_string(a);
            printed = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << table_->entries()[i].name;
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

Scalar lift_scalar(const Scalar &s, const ParamTablePtr &target) {
    if (*s.table() == *target) {
        Scalar r(target);
        for (const auto &[e, c] : s.terms()) r.add_term(e, c);
        return r;
    }
    const auto &src = *s.table();
    std::vector<std::pair<int, int>> map(src.size());
    for (int i = 0; i < src.size(); ++i) {
        auto r = target->resolve(src.entries()[i].name);
        if (!r) throw ScalarError("parameter not present in target table: " +
                                  src.entries()[i].name);
        map[i] = *r;
    }
    Scalar out(target);
    for (const auto &[e, c] : s.terms()) {
        Scalar::Exponents ne(target->size(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            ne[map[i].first] += e[i] * map[i].second;
        out.add_term(ne, c);
    }
    return out;
}

} // namespace ncforms
