#pragma once

#include "ncforms/calculus.hpp"
#include "ncforms/rewrite.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace ncforms {

/// Invertible commutation constants Q_ij with Q_ij Q_ji = 1, Q_ii = 1; the
/// pair is stored once under the orientation i < j.
class QMatrix {
public:
    QMatrix(int n, ParamTablePtr params);
    // one symbolic parameter Q[i,j] per unordered pair
    static QMatrix symbolic(int n);

    int n() const { return n_; }
    const ParamTablePtr &params() const { return params_; }

    void set(int i, int j, const Scalar &v); // 0-based, i != j
    Scalar q(int i, int j) const;            // resolves the inverse orientation

private:
    int n_;
    ParamTablePtr params_;
    std::map<std::pair<int, int>, Scalar> entries_;
};

/// Rewrite presentation of the Q-quantum space with differentials:
/// x_i x_j = Q_ij x_j x_i and its dx-extensions; normal order dx's first.
RewriteSystem q_algebra(const QMatrix &Q);

/// Left Q-partial d/dx_k on normal forms of the quotient (k is a point
/// index, 0-based).
Form q_partial(const Form &H, int k, const RewriteSystem &sys, const QMatrix &Q);

/// The same recursion on the free algebra, no normalization; used for the
/// ideal-stability identity.
Form q_partial_free(const Form &H, int k, const QMatrix &Q);

/// normalize(d H) - sum_k dx_k dH/dx_k, contractually zero.
Form q_d_check(const Form &H, const RewriteSystem &sys, const QMatrix &Q);

/// Finite abelian group Z_N1 x ... x Z_Nr.
class GroupIndex {
public:
    using Elem = std::vector<int>;

    explicit GroupIndex(std::vector<int> moduli);

    const std::vector<int> &moduli() const { return moduli_; }
    int order() const { return order_; }
    Elem identity() const { return Elem(moduli_.size(), 0); }
    Elem add(const Elem &a, const Elem &b) const;
    Elem neg(const Elem &a) const;
    int flat(const Elem &a) const;
    Elem unflat(int v) const;
    std::vector<Elem> elements() const;
    std::string str(const Elem &a) const;

private:
    std::vector<int> moduli_;
    int order_;
};

/// Q-family indexed by group elements: Q_ij^(g) with
/// Q_ji^(g^-1) = (Q_ij^(g))^-1; one canonical entry per inverse pair.
class GroupQMatrix {
public:
    GroupQMatrix(int n, GroupIndex group, ParamTablePtr params);
    static GroupQMatrix symbolic(int n, GroupIndex group);

    int n() const { return n_; }
    const GroupIndex &group() const { return group_; }
    const ParamTablePtr &params() const { return params_; }

    void set(int i, int j, const GroupIndex::Elem &g, const Scalar &v);
    Scalar q(int i, int j, const GroupIndex::Elem &g) const;

private:
    int n_;
    GroupIndex group_;
    ParamTablePtr params_;
    std::map<std::tuple<int, int, int>, Scalar> entries_;
    std::tuple<int, int, int, bool> canonical(int i, int j, int gflat) const;
};

/// Q-space on generators x_i^(g) together with the G-action by relabeling.
class GroupedQSystem {
public:
    GroupedQSystem(RewriteSystem sys, GroupIndex group, int n);

    const RewriteSystem &sys() const { return sys_; }
    const GroupIndex &group() const { return group_; }
    int n() const { return n_; }

    uint32_t x_slot(int i, int gflat) const;
    uint32_t dx_slot(int i, int gflat) const;

    Form act(const GroupIndex::Elem &h, const Form &a) const;
    ExtendedForm act(const GroupIndex::Elem &h, const ExtendedForm &a) const;

    // orbit equality under the group action (decidable by enumeration)
    bool equivalent(const Form &a, const Form &b) const;

private:
    RewriteSystem sys_;
    GroupIndex group_;
    int n_;
};

GroupedQSystem group_algebra(const GroupQMatrix &Q);

/// nu = I(A_t(w)); the construction commutes with every group element.
Form equivariant_primitive(const Form &w, const GroupedQSystem &gs);

} // namespace ncforms
