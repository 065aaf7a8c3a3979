#ifndef DRINFELD_SERIALIZE_HPP
#define DRINFELD_SERIALIZE_HPP

#include <json.hpp>

#include "drinfeld/realize.hpp"
#include "drinfeld/survey.hpp"
#include "drinfeld/torsion.hpp"

namespace drinfeld {

using Json = nlohmann::ordered_json;

/// Polynomial and element grammar: a polynomial is the list of its
/// coefficients, low degree first; an F_{p^s} coefficient is a bare integer
/// for s = 1 and the list of its s base-p digits otherwise. The zero
/// polynomial is the empty list. A field element is the list of its flat
/// F_q coordinates.
Json to_json(const APoly& a);
Json to_json(const FieldElem& x);
Json to_json(const OrePoly& f);

APoly poly_from_json(const std::shared_ptr<const BaseField>& fq, const Json& j);
FieldElem elem_from_json(const FieldCtxPtr& ctx, const Json& j);

Json field_descriptor(const FieldCtxPtr& ctx);

Json to_json(const VerificationRecord& r);
Json to_json(const EnumerationRecord& r);
Json to_json(const CensusReport& r);
std::string census_csv(const CensusReport& r);
Json to_json(const FrobMatrix& m);
Json to_json(const MatrixClass& mc);
Json to_json(const SurveyReport& r);

}  // namespace drinfeld

#endif
