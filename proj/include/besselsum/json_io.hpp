#pragma once

// JSON and CSV renderings of results. Floats are written with 17
// significant digits and object keys keep insertion order, so identical
// requests give byte-identical output. Non-finite numbers become the
// strings "inf", "-inf" and "nan".

#include <string>

#include <json.hpp>

#include "besselsum/direct_eval.hpp"
#include "besselsum/expansion.hpp"

namespace besselsum {

using Json = nlohmann::ordered_json;

Json to_json(const EvalResult& r);
Json to_json(const Expansion& e);
Json terms_to_json(const Expansion& e);

std::string dump(const Json& j, int indent = 2);

/// "power,const_coeff,log_coeff" header and one row per term.
std::string terms_csv(const Expansion& e);

std::string format_double(double v);

}  // namespace besselsum
