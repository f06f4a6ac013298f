#pragma once

#include "ncforms/form.hpp"

#include <map>
#include <optional>

namespace ncforms {

class RewriteSystem;

struct NotClosedError : std::runtime_error {
    NotClosedError() : std::runtime_error("NotClosed: form is not closed") {}
};
struct IncompatibleRelationsError : std::runtime_error {
    explicit IncompatibleRelationsError(const std::string &why)
        : std::runtime_error("IncompatibleRelations: " + why) {}
};

/// Sum over letters of +/- prefix * image(letter) * suffix, the sign being
/// (-1)^(op_parity * z2(prefix)).  With op_parity 1 and the dx links as
/// images this is the differential d; Derivations reuse it with their own
/// images and parity.
Form letterwise_derivation(const Form &a, const std::vector<Form> &images,
                           int op_parity);

/// d on the free algebra: x_i -> y_i, y_i -> 0, graded Leibniz.
Form differential(const Form &a);
/// d over a quotient: the system's d-images, then normalization.
Form differential(const Form &a, const RewriteSystem &sys);

/// Element of the t/tau-extended algebra, stored as
///   omega = sum_m t^m plus[m]  +  tau * sum_m t^m minus[m].
/// tau^2 = 0 is structural; t is even central, tau odd graded-central.
class ExtendedForm {
public:
    ExtendedForm() = default;
    explicit ExtendedForm(SignaturePtr sig) : sig_(std::move(sig)) {}

    static ExtendedForm from_form(const Form &f, int t_exp = 0, bool tau = false);

    const SignaturePtr &sig() const { return sig_; }
    const std::map<int, Form> &plus() const { return plus_; }
    const std::map<int, Form> &minus() const { return minus_; }
    bool is_zero() const;

    ExtendedForm operator+(const ExtendedForm &o) const;
    ExtendedForm operator-(const ExtendedForm &o) const;
    ExtendedForm operator-() const;
    ExtendedForm operator*(const ExtendedForm &o) const;
    bool operator==(const ExtendedForm &o) const;
    bool operator!=(const ExtendedForm &o) const { return !(*this == o); }

    void add_plus(int m, const Form &f);
    void add_minus(int m, const Form &f);

    // plus-part evaluated at t = 1 resp. t = 0
    Form plus_at_one() const;
    Form plus_at_zero() const;

    ExtendedForm normalized(const RewriteSystem &sys) const;

    std::string str() const;

private:
    SignaturePtr sig_;
    std::map<int, Form> plus_, minus_; // t-exponent -> coefficient form
    void prune();
};

/// d on the extended algebra (d(t) = tau).
ExtendedForm differential_ext(const ExtendedForm &w,
                              const std::vector<Form> *images = nullptr);

/// The homomorphism A_t: x_i -> t x_i, y_i -> t y_i + tau x_i.  Defined only
/// when every letter of the signature is a point or a linked differential.
ExtendedForm apply_At(const Form &a, const RewriteSystem *sys = nullptr);

/// I(omega) = integral_0^1 dt omega_-: each minus[m] contributes /(m+1).
Form homotopy_I(const ExtendedForm &w);

/// dI(w) + Id(w) - (w_+|_{t=1} - w_+|_{t=0}); contractually zero.
Form homotopy_residual(const ExtendedForm &w, const RewriteSystem *sys = nullptr);

struct Primitive {
    Form primitive;
    Scalar remainder;
};

/// Requires each rule relation to be preserved by A_t (throws
/// IncompatibleRelations otherwise) and the input to be closed.
/// Returns nu = I(A_t(a)) with d(nu) + remainder = a, remainder = pr^{0,0}(a).
Primitive poincare_primitive(const Form &a, const RewriteSystem *sys = nullptr);

/// True when every rule relation is stable under A_t in the extended
/// quotient; cached nowhere, cheap at desk scale.
bool at_preserves_relations(const RewriteSystem &sys);

} // namespace ncforms
