// JSON forms of tables, theories, analyses and corpus reports. Key order is
// fixed so that equal inputs serialize to identical bytes.

#ifndef SUPERCHAR_JSON_HPP_
#define SUPERCHAR_JSON_HPP_

#include <nlohmann/json.hpp>

#include "superchar/verifier.hpp"

namespace superchar {

using Json = nlohmann::ordered_json;

// {order, coeffs} with coefficients as rational strings.
Json to_json(const Cyclotomic& c);
Json to_json(const ElementSet& s);
Json to_json(const Subgroup& h);
Json to_json(const CharacterTable& t);
// Parts, classes and the sigma table in display form.
Json to_json(const SuperTheory& s);
Json to_json(const SeriesResult& r);
Json to_json(const CaminaVerdict& v);
Json to_json(const TheoremReport& r);
Json to_json(const CorpusSummary& s);
Json to_json(const CorpusReport& r);

// Everything the analyze command reports about one theory.
Json analysis_json(Analysis& a);

}  // namespace superchar

#endif  // SUPERCHAR_JSON_HPP_
