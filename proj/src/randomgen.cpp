#include "ncforms/randomgen.hpp"

namespace ncforms {

Scalar random_coeff(Rng &rng, const ParamTablePtr &params) {
    static const Rational pool[] = {Rational(1),     Rational(-1), Rational(1, 2),
                                    Rational(-1, 2), Rational(2),  Rational(-2),
                                    Rational(1, 3),  Rational(3)};
    Rational q = pool[rng.below(8)];
    if (params->size() > 0 && rng.below(3) == 0) {
        int slot = rng.below(params->size());
        int exp = rng.coin() ? 1 : -1;
        return Scalar::param(params, params->entries()[slot].name, exp, q);
    }
    return Scalar::rational(params, q);
}

Scalar random_scalar(Rng &rng, const ParamTablePtr &params, int max_terms) {
    Scalar s(params);
    int terms = 1 + rng.below(max_terms);
    for (int t = 0; t < terms; ++t) {
        Scalar::Exponents e(params->size(), 0);
        for (int i = 0; i < params->size(); ++i) e[i] = rng.below(5) - 2;
        static const Rational pool[] = {Rational(1), Rational(-1), Rational(1, 2),
                                        Rational(5), Rational(-2, 3)};
        s.add_term(e, pool[rng.below(5)]);
    }
    return s;
}

Word random_word(Rng &rng, const std::vector<uint32_t> &letters, int len) {
    Word w;
    w.reserve(len);
    for (int i = 0; i < len; ++i)
        w.push_back(letters[rng.below(static_cast<int>(letters.size()))]);
    return w;
}

Form random_form(Rng &rng, const SignaturePtr &sig,
                 const std::vector<uint32_t> &letters, int max_len, int max_terms) {
    Form f(sig);
    int terms = 1 + rng.below(max_terms);
    for (int t = 0; t < terms; ++t) {
        int len = rng.below(max_len + 1);
        f.add_term(random_word(rng, letters, len), random_coeff(rng, sig->params()));
    }
    return f;
}

Form random_form_py_capped(Rng &rng, const SignaturePtr &sig,
                           const std::vector<uint32_t> &letters, int max_len,
                           int max_terms, int max_py) {
    Form f(sig);
    int terms = 1 + rng.below(max_terms);
    for (int t = 0; t < terms; ++t) {
        int len = rng.below(max_len + 1);
        Word w;
        int py = 0;
        for (int i = 0; i < len; ++i) {
            uint32_t g = letters[rng.below(static_cast<int>(letters.size()))];
            int gp = sig->gen(g).py;
            if (py + gp > max_py) continue;
            py += gp;
            w.push_back(g);
        }
        f.add_term(w, random_coeff(rng, sig->params()));
    }
    return f;
}

Form random_homogeneous_form(Rng &rng, const SignaturePtr &sig,
                             const std::vector<uint32_t> &letters, int max_len,
                             int max_terms, int parity) {
    Form f(sig);
    int terms = 1 + rng.below(max_terms);
    int found = 0;
    for (int tries = 0; tries < 60 && found < terms; ++tries) {
        Word w = random_word(rng, letters, rng.below(max_len + 1));
        if (word_z2(*sig, w) != (parity & 1)) continue;
        f.add_term(w, random_coeff(rng, sig->params()));
        ++found;
    }
    return f;
}

ExtendedForm random_extended_form(Rng &rng, const SignaturePtr &sig,
                                  const std::vector<uint32_t> &letters, int max_len,
                                  int max_t_exp) {
    ExtendedForm e(sig);
    int pieces = 1 + rng.below(3);
    for (int i = 0; i < pieces; ++i) {
        int m = rng.below(max_t_exp + 1);
        Form f = random_form(rng, sig, letters, max_len, 2);
        if (rng.coin())
            e.add_plus(m, f);
        else
            e.add_minus(m, f);
    }
    return e;
}

Derivation random_derivation(Rng &rng, const SignaturePtr &sig, int parity,
                             bool point_values_only, int max_len) {
    std::vector<uint32_t> letters =
        point_values_only ? point_slots(sig) : all_slots(sig);
    std::vector<Form> vals;
    for (uint32_t x : sig->points()) {
        int want = (parity + sig->gen(x).z2) & 1;
        if (rng.below(4) == 0) {
            vals.push_back(Form::zero(sig));
            continue;
        }
        vals.push_back(random_homogeneous_form(rng, sig, letters, max_len, 2, want));
    }
    return Derivation(sig, parity, std::move(vals));
}

std::vector<uint32_t> all_slots(const SignaturePtr &sig) {
    std::vector<uint32_t> v(sig->size());
    for (int i = 0; i < sig->size(); ++i) v[i] = static_cast<uint32_t>(i);
    return v;
}

std::vector<uint32_t> point_slots(const SignaturePtr &sig) { return sig->points(); }

} // namespace ncforms
