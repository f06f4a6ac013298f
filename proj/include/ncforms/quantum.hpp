#pragma once

#include "ncforms/calculus.hpp"
#include "ncforms/rewrite.hpp"

#include <map>
#include <vector>

namespace ncforms {

/// Weyl algebra on n canonical pairs with differentials: [p_i, q_j] = h d_ij,
/// differentials commute with points and anticommute among themselves.
/// Normal order: dq's, dp's, q's, p's, each ascending.
RewriteSystem weyl_algebra(int n, ParamTablePtr params = nullptr);

/// The (possibly graded) Weyl algebra on pairs F^a, G_a used by Clebsch
/// representations; no differentials.  parities[a] = 1 marks a fermionic pair.
RewriteSystem clebsch_algebra(const std::vector<int> &parities,
                              ParamTablePtr params = nullptr);

/// dH = sum_u du dH/du read off the normal form of dH; u is a point slot.
Form weyl_partial(const Form &H, uint32_t point_slot, const RewriteSystem &sys);

/// Poincare primitive through the normal-symbol isomorphism (claims (A)-(C)):
/// classical homotopy on the quadratic shadow, re-read as a normal-ordered
/// quantum form.  Requires the system's normal-order transfer to be exact.
Primitive quantum_poincare(const Form &a, const RewriteSystem &sys);

/// Finite-dimensional Lie algebra with a representation: structure constants
/// c^k_ij and matrices A^beta_{i alpha}; optional Z2-gradings on V.
/// Antisymmetry, the Jacobi identity and the representation condition are
/// validated eagerly at construction.
class LieData {
public:
    LieData(int dim, int repdim, ParamTablePtr params);

    void set_c(int i, int j, int k, const Scalar &v); // also sets c^k_ji = -v
    void set_A(int i, int beta, int alpha, const Scalar &v);
    void set_parities(std::vector<int> p);

    int dim() const { return dim_; }
    int repdim() const { return repdim_; }
    const ParamTablePtr &params() const { return params_; }
    const std::vector<int> &parities() const { return parities_; }
    int parity(int alpha) const {
        return parities_.empty() ? 0 : parities_.at(alpha);
    }

    Scalar c(int i, int j, int k) const;
    Scalar A(int i, int beta, int alpha) const;

    void validate() const; // throws on bad data

private:
    int dim_, repdim_;
    ParamTablePtr params_;
    std::map<std::tuple<int, int, int>, Scalar> c_, A_;
    std::vector<int> parities_;
};

// Shipped datasets, all over a {h, k} parameter table.
ParamTablePtr lie_param_table();
LieData lie_aff1();
LieData lie_sl2();
LieData lie_gl(int n, const std::vector<int> &parities = {});
LieData lie_so3();

struct ClebschImages {
    RewriteSystem sys;       // the Weyl / graded-Weyl algebra on F, G
    std::vector<Form> e;     // images of the Lie generators
    std::vector<Form> f;     // images of the V-basis
};

/// e_i = h^-1 sum A^b_{ia} F^a G_b, f_a = k G_a h^-1; rescaled drops the
/// h^-1 factors (quasiclassical form).
ClebschImages clebsch_build(const LieData &data, const Scalar &k_const,
                            bool rescaled = false);

/// Normalizes the defining bracket residuals (or the h-scaled variants);
/// empty report means the representation closes exactly.
Report clebsch_verify(const LieData &data, bool rescaled = false);

} // namespace ncforms
