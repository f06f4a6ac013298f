#pragma once

#include "ncforms/qspace.hpp"
#include "ncforms/quantum.hpp"
#include "ncforms/suites.hpp"

#include <string>

namespace ncforms {

/// JSON presentation schema: { name, params: [{name, inverse?}],
/// generators: [{name, py, z2, dx_of?}], rules: [{left: [a, b], right: expr}],
/// d_images: {gen: expr} }.  Generator order is the normal order.
RewriteSystem load_presentation(const std::string &json_text);
std::string export_presentation(const RewriteSystem &sys, bool pretty = true);

/// { dim, repdim, c: [[i,j,k,expr]...], A: [[i,beta,alpha,expr]...],
///   params?: [...], parities?: [...] }, indices 1-based.
LieData load_liedata(const std::string &json_text);

/// { n, entries: [[i,j,expr]...] } or with group
/// { n, group: [N1,...], entries: [[i,j,[g...],expr]...] }.
QMatrix load_qmatrix(const std::string &json_text);
GroupQMatrix load_group_qmatrix(const std::string &json_text);
bool qmatrix_json_has_group(const std::string &json_text);

/// Square matrix of scalar expressions: [["1","0"],["1/2","-1"]], optional
/// {"params": [...], "A": [[...]]} wrapper for symbolic entries.
std::vector<std::vector<Scalar>> load_matrix(const std::string &json_text);

std::string suite_result_json(const SuiteResult &r);

} // namespace ncforms
