#pragma once

#include <string>
#include <variant>

#include "pencils/classifier.hpp"
#include "pencils/harness.hpp"
#include "pencils/prime_field.hpp"
#include "pencils/rational.hpp"

namespace pencils {

/*
 * JSON wire formats. A pencil is
 *
 *   {"Q":  ["a","b","c","h","e","f"],
 *    "Qp": ["a","b","c","h","e","f"],
 *    "field": {"type": "Q"} | {"type": "Fp", "p": 10007}}
 *
 * with entries given as decimal strings ("p" or "p/q"; plain JSON integers
 * are also accepted). Classification output is {"orbit": ..,
 * "certificate": ..} with every binary form serialized as
 * {"degree": d, "coefficients": [..]}, coefficient i multiplying
 * s^(d-i) t^i. Malformed input throws std::invalid_argument.
 */

using AnyPencil = std::variant<Pencil<Rational>, Pencil<Fp>>;

AnyPencil parse_pencil_json(const std::string& text);

std::string classification_to_json(const Classification<Rational>& c, bool pretty = false);
std::string classification_to_json(const Classification<Fp>& c, bool pretty = false);

std::string trial_report_to_json(const TrialReport& r, bool pretty = true);

std::string table_report_to_json(const Table1Report& r, bool pretty = true);
std::string table_report_to_text(const Table1Report& r);

}  // namespace pencils
