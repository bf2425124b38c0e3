#pragma once

#include <nlohmann/json.hpp>

#include "hadstar/classify.hpp"

namespace hadstar {

// All CLI output goes through ordered_json so reports are byte-identical
// across runs for the same input.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const RatVector& v);
Json to_json(const RadicalScalar& s);
Json to_json(const ProjPoint& p);
Json to_json(const LinearForm& f);
Json to_json(const LinearVariety& v);
Json to_json(const PointSet& ps);
Json to_json(const GeneralLinearity& gl);
Json to_json(const Witness& w);
Json to_json(const ClassificationReport& r);
Json to_json(const StarConfiguration& c);
Json to_json(const LineConstruction& c);
Json to_json(const HyperplaneConstruction& c);

// Parsers accept rationals as "p/q" strings (or plain JSON integers) and
// points/forms as bare coordinate arrays or {"coords"/"coeffs": [...]}.
Rational rational_from_json(const Json& j);
RatVector vector_from_json(const Json& j);
ProjPoint point_from_json(const Json& j);
LinearForm form_from_json(const Json& j);
std::vector<ProjPoint> points_from_json(const Json& j);
std::vector<LinearForm> forms_from_json(const Json& j);

}  // namespace hadstar
