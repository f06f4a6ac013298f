#pragma once

#include "ncforms/calculus.hpp"
#include "ncforms/derivation.hpp"

#include <cstdint>
#include <random>

namespace ncforms {

/// Deterministic seeded generator; all randomized suites draw through this
/// so runs are byte-identical for a fixed seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % n); }
    bool coin() { return below(2) != 0; }

private:
    std::mt19937_64 eng_;
};

/// Coefficient pool: small rationals plus first powers of the declared
/// parameters.
Scalar random_coeff(Rng &rng, const ParamTablePtr &params);

Scalar random_scalar(Rng &rng, const ParamTablePtr &params, int max_terms = 3);

Word random_word(Rng &rng, const std::vector<uint32_t> &letters, int len);

/// Sum of up to max_terms words of length <= max_len over the given letters.
Form random_form(Rng &rng, const SignaturePtr &sig,
                 const std::vector<uint32_t> &letters, int max_len, int max_terms);

/// Same, but every term keeps total differential degree <= max_py.
Form random_form_py_capped(Rng &rng, const SignaturePtr &sig,
                           const std::vector<uint32_t> &letters, int max_len,
                           int max_terms, int max_py);

/// Z2-homogeneous form of the requested parity (may come out zero when the
/// letter set cannot realize it).
Form random_homogeneous_form(Rng &rng, const SignaturePtr &sig,
                             const std::vector<uint32_t> &letters, int max_len,
                             int max_terms, int parity);

ExtendedForm random_extended_form(Rng &rng, const SignaturePtr &sig,
                                  const std::vector<uint32_t> &letters, int max_len,
                                  int max_t_exp);

/// x-determined derivation; point_values_only restricts values to 0-forms
/// (the ungraded setting), otherwise values may involve differentials.
Derivation random_derivation(Rng &rng, const SignaturePtr &sig, int parity,
                             bool point_values_only, int max_len = 3);

std::vector<uint32_t> all_slots(const SignaturePtr &sig);
std::vector<uint32_t> point_slots(const SignaturePtr &sig);

} // namespace ncforms
