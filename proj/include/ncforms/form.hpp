#pragma once

#include "ncforms/signature.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ncforms {

using Word = std::vector<uint32_t>;

// Length-lexicographic word order; the canonical term order everywhere.
struct WordLess {
    bool operator()(const Word &a, const Word &b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

int word_z2(const Signature &sig, const Word &w);
int word_py(const Signature &sig, const Word &w);
int word_px(const Signature &sig, const Word &w);

/// Element of the forms algebra: finite Scalar-weighted sum of words.
/// No zero coefficients are stored; equality is term-map equality.
class Form {
public:
    Form() = default;
    explicit Form(SignaturePtr sig) : sig_(std::move(sig)) {}

    static Form zero(SignaturePtr sig) { return Form(std::move(sig)); }
    static Form scalar(SignaturePtr sig, const Scalar &c);
    static Form word(SignaturePtr sig, const Word &w, const Scalar &c);
    static Form word(SignaturePtr sig, const Word &w);
    static Form letter(SignaturePtr sig, uint32_t slot);
    static Form one(SignaturePtr sig);

    const SignaturePtr &sig() const { return sig_; }
    const std::map<Word, Scalar, WordLess> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Form operator+(const Form &o) const;
    Form operator-(const Form &o) const;
    Form operator-() const;
    Form operator*(const Form &o) const; // free word concatenation
    Form &operator+=(const Form &o);
    Form &operator-=(const Form &o);

    Form scaled(const Scalar &c) const;
    Form scaled(const Rational &q) const;

    bool operator==(const Form &o) const;
    bool operator!=(const Form &o) const { return !(*this == o); }

    // Partition by (p_x, p_y); empty components omitted.
    std::map<std::pair<int, int>, Form> bigrade() const;

    // Z2 parity if every term has the same one, else -1.  The zero form is
    // homogeneous of either parity; we report 0.
    int homogeneous_z2() const;

    int max_py() const;

    // The (0,0)-component: coefficient of the empty word.
    Scalar scalar_part() const;
    Form without_scalar_part() const;

    // Applies a letter substitution slot -> (sign, slot); used by the group
    // action of S12 and the Cartan involution.
    Form relabel(const std::vector<std::pair<int, uint32_t>> &images) const;

    // Concatenation with a per-left-word integer sign (tau crossings).
    Form mul_signed(const Form &o, const std::function<int(const Word &)> &sign) const;

    void add_term(const Word &w, const Scalar &c);

    std::string str() const;

private:
    SignaturePtr sig_;
    std::map<Word, Scalar, WordLess> terms_;

    void check_same_sig(const Form &o) const;
};

std::string word_str(const Signature &sig, const Word &w);

} // namespace ncforms
