#pragma once

#include "ncforms/quantum.hpp"
#include "ncforms/rewrite.hpp"

#include <map>

namespace ncforms {

/// Differential-forms complexes on Lie algebras, presented as rewrite
/// systems with a differential signature.  Constructors run the
/// d-compatibility audit and throw on failure.

/// General ghost complex on U(G): generators e_i, w^a_b, W^a_b, rho^a_b
/// (w/W named w[a,b] and W[a,b], rho[a,b]); finite adds the annihilation
/// relations that cut the complex down to finite rank.
RewriteSystem general_complex(const LieData &data, bool finite = false);

/// Ghost-free complex of the Ehrenfest algebra G(A): [e_i, eb_j] = A_ji eb_j,
/// differentials written on the right of normal monomials.
RewriteSystem ehrenfest_complex(const std::vector<std::vector<Scalar>> &A);

/// aff(1) = the 1x1 Ehrenfest case, with generators named e1, e2.
RewriteSystem aff1_complex();

enum class GlVariant { left, right };

/// gl(V) complex: [e[i,a], de[j,b]] = d_ja de[i,b] (left) or
/// -d_ib de[j,a] (right); differentials move to the left.
RewriteSystem gl_complex(int n, GlVariant variant);

/// The Cartan involution g -> -g^t maps each left rule onto the
/// corresponding right rule; empty report = the rule sets coincide.
Report gl_involution_check(int n);

/// so(n) complex on M[i,j] = -M[j,i], th[i,j], rho[i,j] = rho[j,i].
RewriteSystem so_complex(int n);

/// Sub-complex of gl generated by x = e[1,1], y = e[1,2] and their
/// differentials; its normal-form differential is the discrete-difference
/// operator checked against discrete_d.
RewriteSystem gl_aff_subcomplex(GlVariant variant);

struct GhostlessVerdict {
    Scalar determinant;
    bool exists; // false: the ghostless complex does not exist
};

/// Consistency matrix of the adjoint sl(2) candidate over lambda, mu, nu;
/// its determinant vanishes identically.
GhostlessVerdict sl2_ghostless_check();

/// Exact polynomials in the two commuting images (y, x) of the aff(1)
/// subcomplex; coefficients are Scalars.
class DiscretePoly {
public:
    DiscretePoly() : params_(empty_params()) {}
    explicit DiscretePoly(ParamTablePtr params) : params_(std::move(params)) {}

    static DiscretePoly constant(ParamTablePtr params, const Scalar &c);
    static DiscretePoly monomial(ParamTablePtr params, int deg_y, int deg_x,
                                 const Scalar &c);

    const ParamTablePtr &params() const { return params_; }
    const std::map<std::pair<int, int>, Scalar> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool x_only() const;

    DiscretePoly operator+(const DiscretePoly &o) const;
    DiscretePoly operator-(const DiscretePoly &o) const;
    DiscretePoly operator-() const;
    DiscretePoly operator*(const DiscretePoly &o) const;
    bool operator==(const DiscretePoly &o) const { return terms_ == o.terms_; }
    bool operator!=(const DiscretePoly &o) const { return !(*this == o); }

    DiscretePoly partial_y() const;
    DiscretePoly antiderivative_y() const;
    DiscretePoly shift_x(int delta) const; // x -> x + delta
    Scalar eval_x(long v) const;           // requires x_only()

    void add_term(int deg_y, int deg_x, const Scalar &c);
    std::string str() const;

private:
    ParamTablePtr params_;
    std::map<std::pair<int, int>, Scalar> terms_;
};

/// Solves T(x+1) - T(x) = g(x) with T(0) = 0 in the falling-factorial
/// basis; g must depend on x only.
DiscretePoly antidifference_forward(const DiscretePoly &g);

struct DiscreteOneForm {
    DiscretePoly dy_coeff;
    DiscretePoly dx_coeff;
};

/// Variant 1: d f = dy f_y + dx (f(y,x+1) - f(y,x));
/// variant 2: d f = dx (f(x,y) - f(x-1,y)) + dy f_y.
DiscreteOneForm discrete_d(const DiscretePoly &f, int variant);

/// Reconstructs a primitive of a closed 1-form; throws NotClosed otherwise.
DiscretePoly discrete_poincare(const DiscreteOneForm &w, int variant);

} // namespace ncforms
