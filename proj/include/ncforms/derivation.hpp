#pragma once

#include "ncforms/calculus.hpp"

#include <vector>

namespace ncforms {

/// Graded vector field on the free forms algebra, determined by its values
/// on the x-generators; the action on y_i is forced to (-1)^p(X) d(X_i).
class Derivation {
public:
    Derivation(SignaturePtr sig, int parity, std::vector<Form> values);

    const SignaturePtr &sig() const { return sig_; }
    int parity() const { return parity_; }
    const Form &value(size_t point_index) const { return values_.at(point_index); }
    const std::vector<Form> &values() const { return values_; }

    /// Extension to the whole forms algebra as a graded derivation.
    Form apply(const Form &a) const;

    /// [X,Z] = XZ - (-1)^{p(X)p(Z)} ZX, again x-determined.
    Derivation bracket(const Derivation &o) const;

    /// Interior product X -| a.
    Form contract(const Form &a) const;

private:
    SignaturePtr sig_;
    int parity_;
    std::vector<Form> values_; // indexed like sig->points()
};

/// d -| a = deg_y(a) a, the contraction with d itself.
Form d_contract(const Form &a);

/// Z_l -| ... -| Z_1 -| a with zs listed innermost (Z_1) first.
Form contract_chain(const std::vector<Derivation> &zs, const Form &a);

/// LHS - RHS of the Cartan formula: the classical-sign version when every
/// derivation is even, the graded version otherwise.  Contractually zero.
Form cartan_residual(const std::vector<Derivation> &zs, const Form &a);

/// The two variants individually (both must vanish; the even case of the
/// graded formula reduces to the ungraded one).
Form cartan_residual_ungraded(const std::vector<Derivation> &zs, const Form &a);
Form cartan_residual_graded(const std::vector<Derivation> &zs, const Form &a);

} // namespace ncforms
