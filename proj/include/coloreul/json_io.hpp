#pragma once

// JSON forms of the library's values. Every writer checks its output against
// the matching schema in docs/schemas.md before returning.

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "coloreul/binomial.hpp"
#include "coloreul/descent_algebra.hpp"
#include "coloreul/group.hpp"
#include "coloreul/poset.hpp"

namespace coloreul {

using Json = nlohmann::ordered_json;

/// Thrown when a document does not match the schema it claims to follow.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checks required keys and value shapes for a named schema: "permutation",
/// "poset", "series", "count", "idempotents", "tensor" or "report".
void validate_json(const Json& doc, std::string_view schema);

/// {"r":4,"n":5,"letters":[[2,0],[1,3],...]}
Json to_json(const ColoredPermutation& pi);
ColoredPermutation permutation_from_json(const Json& doc);

/// {"r","n","elements":[[v,c],...],"covers":[[[v,c],[v,c]],...]}; the zero
/// chain is implicit and omitted on output.
Json to_json(const ColoredPoset& poset);
ColoredPoset poset_from_json(const Json& doc);

/// {"t_coeffs":["1","6","1"]}
Json to_json(const TruncatedSeries& series);
TruncatedSeries series_from_json(const Json& doc);

/// {"op":..., "params":{...}, "count":"<decimal>"}
Json count_record(std::string op, Json params, const BigInt& count);

/// Idempotent table by descent class in lowest terms, plus the lcm of all
/// denominators.
Json to_json(const IdempotentTable& table);

/// Nested arrays of decimal strings, m[j][k][i].
Json tensor_to_json(const StructureTensor& tensor);
StructureTensor tensor_from_json(const Json& doc);

Json to_json(const SpanWitness& witness);

}  // namespace coloreul
