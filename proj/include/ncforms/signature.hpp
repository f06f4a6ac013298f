#pragma once

#include "ncforms/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ncforms {

struct SignatureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One generator (letter) of the algebra.  Slot order doubles as the normal
/// order of the associated rewrite system and as the canonical print order.
struct GeneratorInfo {
    std::string name; // parse/print token, e.g. "x1", "dq2", "w[1,2]"
    int py = 0;       // differential-form degree (x:0, dx:1, rho:2)
    int z2 = 0;       // Z2 parity
    int dx_of = -1;   // for a differential letter: slot of its point
    int d_partner = -1; // for a point letter: slot of its differential
};

class Signature {
public:
    Signature(std::vector<GeneratorInfo> gens, ParamTablePtr params);

    int size() const { return static_cast<int>(gens_.size()); }
    const GeneratorInfo &gen(uint32_t slot) const { return gens_.at(slot); }
    const std::vector<GeneratorInfo> &gens() const { return gens_; }
    const ParamTablePtr &params() const { return params_; }

    // Slots of the point generators (py == 0, in declaration order); these
    // index Derivation values and the homotopy images.
    const std::vector<uint32_t> &points() const { return points_; }
    int point_index(uint32_t slot) const; // -1 if not a point

    int slot(const std::string &name) const; // -1 if unknown
    uint32_t require_slot(const std::string &name) const;

    bool operator==(const Signature &o) const;
    bool operator!=(const Signature &o) const { return !(*this == o); }

private:
    std::vector<GeneratorInfo> gens_;
    ParamTablePtr params_;
    std::vector<uint32_t> points_;
    std::map<std::string, uint32_t> by_name_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

/// Free forms algebra R<x1..xn, y1..yn> with optional Z2-gradings on the x's
/// and extra coefficient parameters.  Slots: y1..yn then x1..xn, so the
/// canonical order keeps differentials on the left.
SignaturePtr free_signature(int n, const std::vector<int> &parities = {},
                            ParamTablePtr params = nullptr);

} // namespace ncforms
