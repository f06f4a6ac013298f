#include "ncforms/signature.hpp"

namespace ncforms {

Signature::Signature(std::vector<GeneratorInfo> gens, ParamTablePtr params)
    : gens_(std::move(gens)), params_(params ? std::move(params) : empty_params()) {
    for (uint32_t i = 0; i < gens_.size(); ++i) {
        const auto &g = gens_[i];
        if (g.name.empty()) throw SignatureError("generator name must be nonempty");
        if (by_name_.count(g.name))
            throw SignatureError("duplicate generator name: " + g.name);
        by_name_[g.name] = i;
        if (g.py == 0) points_.push_back(i);
    }
    for (uint32_t i = 0; i < gens_.size(); ++i) {
        const auto &g = gens_[i];
        if (g.dx_of >= 0) {
            if (g.dx_of >= size() || gens_[g.dx_of].py != 0)
                throw SignatureError("bad dx_of link on " + g.name);
        }
        if (g.d_partner >= 0) {
            if (g.d_partner >= size() || gens_[g.d_partner].dx_of != static_cast<int>(i))
                throw SignatureError("bad d_partner link on " + g.name);
        }
    }
}

int Signature::point_index(uint32_t slot) const {
    for (size_t k = 0; k < points_.size(); ++k)
        if (points_[k] == slot) return static_cast<int>(k);
    return -1;
}

int Signature::slot(const std::string &name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : static_cast<int>(it->second);
}

uint32_t Signature::require_slot(const std::string &name) const {
    int s = slot(name);
    if (s < 0) throw SignatureError("unknown generator: " + name);
    return static_cast<uint32_t>(s);
}

bool Signature::operator==(const Signature &o) const {
    if (gens_.size() != o.gens_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i) {
        const auto &a = gens_[i], &b = o.gens_[i];
        if (a.name != b.name || a.py != b.py || a.z2 != b.z2 || a.dx_of != b.dx_of ||
            a.d_partner != b.d_partner)
            return false;
    }
    return *params_ == *o.params_;
}

SignaturePtr free_signature(int n, const std::vector<int> &parities,
                            ParamTablePtr params) {
    if (n < 1) throw SignatureError("need at least one generator");
    if (!parities.empty() && static_cast<int>(parities.size()) != n)
        throw SignatureError("parity list size mismatch");
    std::vector<GeneratorInfo> gens(2 * n);
    for (int i = 0; i < n; ++i) {
        int p = parities.empty() ? 0 : (parities[i] & 1);
        // slots: y1..yn first, then x1..xn
        gens[i] = {"y" + std::to_string(i + 1), 1, (p + 1) & 1, n + i, -1};
        gens[n + i] = {"x" + std::to_string(i + 1), 0, p, -1, i};
    }
    return std::make_shared<const Signature>(std::move(gens), std::move(params));
}

} // namespace ncforms
