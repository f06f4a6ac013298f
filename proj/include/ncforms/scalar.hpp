#pragma once

#include "ncforms/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncforms {

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Declared set of commuting, even coefficient parameters.
///
/// Inverse pairs (such as Q[i,j] / Q[j,i]) are stored once under a canonical
/// name; the partner name resolves to exponent -1 of the same slot.  A name
/// that would be its own inverse is the constant 1 and is not stored.
class ParamTable {
public:
    struct Entry {
        std::string name;         // canonical name, owns the exponent slot
        std::string inverse_name; // empty if the parameter is self-standing
    };

    ParamTable() = default;

    // Adds a canonical parameter, optionally with a paired inverse name.
    void add(const std::string &name, const std::string &inverse_name = "");

    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<Entry> &entries() const { return entries_; }

    // Resolves a (possibly inverse) name to (slot, orientation ±1).
    std::optional<std::pair<int, int>> resolve(const std::string &name) const;

    bool operator==(const ParamTable &o) const;
    bool operator!=(const ParamTable &o) const { return !(*this == o); }

private:
    std::vector<Entry> entries_;
    std::map<std::string, std::pair<int, int>> lookup_;
};

using ParamTablePtr = std::shared_ptr<const ParamTable>;

ParamTablePtr empty_params();
ParamTablePtr single_param(const std::string &name);

/// Exact element of the coefficient ring: a Laurent polynomial over Q in the
/// parameters of a ParamTable.  Zero coefficients are never stored; equality
/// is term-map equality.
class Scalar {
public:
    using Exponents = std::vector<int>;

    Scalar() : table_(empty_params()) {}
    explicit Scalar(ParamTablePtr table) : table_(std::move(table)) {}

    static Scalar rational(ParamTablePtr table, const Rational &q);
    static Scalar integer(ParamTablePtr table, long v) {
        return rational(std::move(table), Rational(v));
    }
    // Monomial c * name^exp; throws on unknown parameter.
    static Scalar param(ParamTablePtr table, const std::string &name, int exp = 1,
                        const Rational &c = Rational(1));

    const ParamTablePtr &table() const { return table_; }
    const std::map<Exponents, Rational> &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_rational() const; // no parameter dependence
    std::optional<Rational> as_rational() const;

    Scalar operator+(const Scalar &o) const;
    Scalar operator-(const Scalar &o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar &o) const;
    Scalar &operator+=(const Scalar &o) { return *this = *this + o; }
    Scalar &operator-=(const Scalar &o) { return *this = *this - o; }
    Scalar &operator*=(const Scalar &o) { return *this = *this * o; }

    Scalar mul_rational(const Rational &q) const;
    Scalar div_integer(long k) const { return mul_rational(Rational(1, k)); }

    // Inverse of a single-term Scalar; throws ScalarError otherwise.
    Scalar monomial_inverse() const;

    // Substitutes values for a subset of parameters (by canonical name).
    Scalar substitute(const std::map<std::string, Rational> &values) const;

    bool operator==(const Scalar &o) const;
    bool operator!=(const Scalar &o) const { return !(*this == o); }

    std::string str() const;

    // Internal: inserts a raw term, merging and pruning zeros.
    void add_term(const Exponents &e, const Rational &c);

private:
    ParamTablePtr table_;
    std::map<Exponents, Rational> terms_;

    void check_same_table(const Scalar &o) const;
};

/// Re-expresses a Scalar over a larger table; every canonical parameter of
/// the source must resolve in the target.
Scalar lift_scalar(const Scalar &s, const ParamTablePtr &target);

} // namespace ncforms
