#pragma once

#include "toledo/mgnclasses.hpp"
#include "toledo/rmatrix.hpp"
#include "toledo/tables.hpp"

#include "json.hpp"

#include <string>

namespace toledo {

using json = nlohmann::ordered_json;

// CycloNum: {"order": N, "coeffs": ["p/q", ...]}; a bare "p/q" string or an
// integer is read as a rational.
json to_json(const CycloNum& x);
CycloNum cyclo_from_json(const json& j);
json to_json(const CMat& m);
CMat cmat_from_json(const json& j);

json to_json(const H2Class& c);
H2Class h2class_from_json(const json& j);
json to_json(const Table& t);
json to_json(const QMat& m);
json to_json(const R1Matrix& R);

// json: one envelope per call; csv and md: one block per table.
std::string render_tables(const std::vector<Table>& tables, const std::string& format, const std::string& command,
                          const json& params);
std::string render_payload(const json& payload, const std::string& format, const std::string& command,
                           const json& params);

}  // namespace toledo
