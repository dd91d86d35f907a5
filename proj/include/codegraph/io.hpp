#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "codegraph/linalg.hpp"
#include "codegraph/witness.hpp"

namespace codegraph {

// Matrix file: header "p e k n", then k lines of n integer element codes
// in [0, p^e). The row space must have rank k. Elements always serialize
// as their integer code.
Subspace read_matrix(std::istream& in);
Subspace read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Subspace& s);
void write_matrix_file(const std::string& path, const Subspace& s);

nlohmann::json matrix_to_json(const Matrix& m);

nlohmann::json certificate_to_json(const WitnessPair& w);
// Reads back the certificate part; the codes come from their matrix files.
BlockingCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace codegraph
