#pragma once

#include <string>

#include <json.hpp>

#include "bratteli/construct.hpp"

namespace bratteli::report {

using nlohmann::ordered_json;

/// Display-only decimal with 12 significant digits.
std::string decimal(double value);

ordered_json diagram(const Diagram& d);
ordered_json real_algebraic(const RealAlgebraic& r, const Polynomial& minpoly);
ordered_json element(const FieldElement& e);
ordered_json classes(const ClassDecomposition& c);
ordered_json goodness(const GoodnessVerdict& v);
ordered_json membership(const MembershipVerdict& v, const FieldElement& value);
ordered_json measure(const ErgodicMeasure& mu);
ordered_json analysis(const Diagram& d);
ordered_json enumeration(const ErgodicMeasure& mu, unsigned level, const std::vector<FieldElement>& values);
ordered_json equality(const GroupEquality& e);
ordered_json construction(const ConstructionResult& r, const std::string& operation);

}  // namespace bratteli::report
