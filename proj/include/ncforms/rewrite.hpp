#pragma once

#include "ncforms/form.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncforms {

struct RewriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Strategy { leftmost, rightmost };

/// Oriented, terminating set of adjacent-pair rules presenting a quotient
/// algebra.  Slot order of the signature is the normal order: a word is
/// normal when no rule applies to any adjacent pair.
///
/// Every rule must strictly decrease the termination measure
/// (length, inversions, rank-sum), checked at insertion.
class RewriteSystem {
public:
    RewriteSystem(SignaturePtr sig, std::string name = "");

    const SignaturePtr &sig() const { return sig_; }
    const std::string &name() const { return name_; }

    // Adds the rule a*b -> rhs; throws if the measure does not decrease or
    // the pair already has a rule.
    void add_rule(uint32_t a, uint32_t b, const Form &rhs);
    // Replaces any existing rule (annihilations override swaps).
    void set_rule(uint32_t a, uint32_t b, const Form &rhs);

    const Form *rule(uint32_t a, uint32_t b) const;
    const std::map<std::pair<uint32_t, uint32_t>, Form> &rules() const { return rules_; }

    // Differential signature: image of each generator under d (defaults to
    // the signature's dx links; 0 for letters without one).
    void set_d_image(uint32_t slot, const Form &img);
    const Form &d_image(uint32_t slot) const { return d_images_.at(slot); }
    const std::vector<Form> &d_images() const { return d_images_; }

    Form normalize(const Form &a, Strategy st = Strategy::leftmost) const;

    // The classical shadow: keeps only the length-2 leading part of every
    // rule.  Valid primitive route exactly when normal-order transfer is
    // exact (Weyl, Ehrenfest); see quantum_poincare.
    RewriteSystem quadratic_shadow() const;

    bool normal_transfer_exact() const { return normal_transfer_exact_; }
    void set_normal_transfer_exact(bool v) { normal_transfer_exact_ = v; }

    // Words of the quotient basis (normal words) up to the given length,
    // over the given slots; used by exhaustive checks.
    std::vector<Word> normal_words(const std::vector<uint32_t> &slots, int max_len) const;

private:
    SignaturePtr sig_;
    std::string name_;
    std::map<std::pair<uint32_t, uint32_t>, Form> rules_;
    std::vector<Form> d_images_;
    bool normal_transfer_exact_ = false;

    // (length, inversions, rank-sum), compared lexicographically
    std::array<long, 3> measure(const Word &w) const;
    void check_decreasing(uint32_t a, uint32_t b, const Form &rhs) const;
};

struct ReportItem {
    std::string what;    // which rule / which triple
    std::string detail;  // the offending normal forms or residual
};

struct Report {
    std::vector<ReportItem> items;
    bool empty() const { return items.empty(); }
    std::string str() const;
};

/// Checks all length-3 overlaps a*b*c with two distinct first reductions;
/// both reducts must share the same normal form.  Triples are checked in
/// slot order, so the first entry of a nonempty report is the minimal
/// counterexample word.
Report check_local_confluence(const RewriteSystem &sys, int max_degree = 3);

/// For every rule a*b -> r requires normalize(d(a*b) - d(r)) = 0, with d the
/// graded letterwise derivation given by the system's d-images.
Report check_d_compatibility(const RewriteSystem &sys);

} // namespace ncforms
