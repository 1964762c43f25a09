#pragma once

#include <string>

#include <json.hpp>

#include "pencil_tns/degeneration.hpp"
#include "pencil_tns/membership.hpp"
#include "pencil_tns/network.hpp"
#include "pencil_tns/pencil.hpp"
#include "pencil_tns/triangle.hpp"

namespace ptns {

using Json = nlohmann::ordered_json;

// Parsers throw InputError naming the offending line or field.
Json parse_json(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& field);

Json to_json(const BinaryForm& f);
BinaryForm binary_form_from_json(const Json& j);

Json to_json(const Matrix<Rational>& m);
Matrix<Rational> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& field);

// Dense {"shape", "domain", "entries"}; input also accepts {"shape", "nz": [{"idx", "val"}]}.
Json to_json(const Tensor<Rational>& t);
Tensor<Rational> tensor_from_json(const Json& j);
Json to_json(const Tensor<Laurent>& t);  // nonzero entries only

// {"n1", "n2", "A", "B"}; a tensor of shape (2, n1, n2) is accepted too.
Json to_json(const MatrixPencil& p);
MatrixPencil pencil_from_json(const Json& j);

Json to_json(const Network& net);
Network network_from_json(const Json& j);

Json to_json(const KroneckerForm& k);
Json to_json(const TriangleConfig& cfg);
Json to_json(const DefectReport& r);
Json to_json(const std::vector<int>& partition);

Json to_json(const ProfileVerdict& v);
Json to_json(const RankDropResult& r);
Json to_json(const RankDropPoint& p);
Json to_json(const CubicTestResult& r);
Json to_json(const BlockAnnihilatorReport& r);
Json to_json(const EpsilonCurve& c);
Json to_json(const DegenerationTranscript& t);
Json to_json(const RestrictionReport& r);

}  // namespace ptns
