#pragma once

#include "z2rep/cartan_modules.hpp"
#include "z2rep/graded_algebra.hpp"
#include "z2rep/singular_solver.hpp"
#include "z2rep/submodule_quotient.hpp"
#include "z2rep/verma.hpp"

#include <nlohmann/json.hpp>

namespace z2rep {

using Json = nlohmann::ordered_json;

/// Rationals serialize as the string "p/q".
Json to_json(const Rational& x);
Json to_json(const AlgebraElement& x);
Json to_json(const StructureTable& table);
Json to_json(const AxiomReport& report);
Json to_json(const ModuleVector& v);
Json to_json(const SingularReport& report);
Json to_json(const RtildeReport& report);
Json to_json(const RecurrenceSolution& solution);
Json to_json(const ClassificationVerdict& verdict);
Json to_json(const QuotientTable& table);
Json to_json(const IrreducibleHModule& m);
Json to_json(const HClassification& c);
Json to_json(const Chi11Membership& m);

/// "Mr" or "MrLambda".
std::string kind_tag(const VermaKind& kind);

}  // namespace z2rep
