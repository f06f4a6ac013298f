#pragma once

#include "ncforms/calculus.hpp"
#include "ncforms/form.hpp"

#include <string>

namespace ncforms {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string &msg, size_t at)
        : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"),
          pos(at) {}
};

/// Surface syntax: sums of terms, a term is '*'-separated factors with
/// optional ^int powers; factors are scalar literals (3/2, h^-1, Q[1,2]),
/// generator tokens of the active signature (dx1 resolves to the linked
/// differential of x1), d(...), or parenthesized subexpressions.
Form parse_form(const std::string &text, const SignaturePtr &sig,
                const RewriteSystem *sys = nullptr);

/// Same grammar plus the extension letters t and tau.
ExtendedForm parse_extended(const std::string &text, const SignaturePtr &sig,
                            const RewriteSystem *sys = nullptr);

/// Scalar-only expressions (no generators).
Scalar parse_scalar(const std::string &text, const ParamTablePtr &params);

} // namespace ncforms
