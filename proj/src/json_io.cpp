#include "pencils/json_io.hpp"

#include <json.hpp>

#include "pencils/flag_chern.hpp"

namespace pencils {

namespace {

using nlohmann::json;

long long to_ll(const std::string& text) {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad integer \"" + text + "\"");
    return v;
}

Rational parse_rational_entry(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("matrix entry must be a string or integer");
}

Fp parse_fp_entry(const json& j, long long p) {
    if (j.is_number_integer()) return Fp(j.get<long long>(), p);
    if (!j.is_string()) throw std::invalid_argument("matrix entry must be a string or integer");
    const std::string text = j.get<std::string>();
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Fp(to_ll(text), p);
    return Fp(to_ll(text.substr(0, slash)), p) / Fp(to_ll(text.substr(slash + 1)), p);
}

template <class K, class Parse>
SymMatrix3<K> parse_matrix(const json& j, Parse&& parse_entry) {
    if (!j.is_array() || j.size() != 6)
        throw std::invalid_argument("matrix must be an array of 6 entries (a,b,c,h,e,f)");
    std::vector<K> v;
    v.reserve(6);
    for (const auto& e : j) v.push_back(parse_entry(e));
    return SymMatrix3<K>(v[0], v[1], v[2], v[3], v[4], v[5]);
}

template <class K>
json form_to_json(const BinaryForm<K>& f) {
    json coeffs = json::array();
    for (const K& c : f.coefficients()) coeffs.push_back(c.str());
    return json{{"degree", f.degree()}, {"coefficients", coeffs}};
}

template <class K>
json certificate_to_json(const Certificate<K>& cert) {
    json j;
    j["det_cubic"] = form_to_json(cert.det_cubic);
    if (cert.pattern) {
        json pat = json::array();
        for (const auto& [mult, deg] : *cert.pattern) pat.push_back(json::array({mult, deg}));
        j["pattern"] = pat;
    }
    if (cert.multiple_root)
        j["multiple_root"] =
            json::array({cert.multiple_root->first.str(), cert.multiple_root->second.str()});
    if (cert.rank_at_multiple_root) j["rank_at_multiple_root"] = *cert.rank_at_multiple_root;
    if (cert.rank1_locus) j["rank1_locus"] = form_to_json(*cert.rank1_locus);
    return j;
}

template <class K>
std::string classification_to_json_impl(const Classification<K>& c, bool pretty) {
    const json j{{"orbit", orbit_code(c.orbit)}, {"certificate", certificate_to_json(c.certificate)}};
    return pretty ? j.dump(2) : j.dump();
}

}  // namespace

AnyPencil parse_pencil_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object()) throw std::invalid_argument("pencil must be a JSON object");
        const json& field = j.at("field");
        const std::string type = field.at("type").get<std::string>();
        if (type == "Q") {
            return make_pencil(parse_matrix<Rational>(j.at("Q"), parse_rational_entry),
                               parse_matrix<Rational>(j.at("Qp"), parse_rational_entry));
        }
        if (type == "Fp") {
            const long long p = field.at("p").get<long long>();
            if (!is_valid_odd_prime(p))
                throw std::invalid_argument("field.p must be an odd prime below 2^31");
            const auto entry = [p](const json& e) { return parse_fp_entry(e, p); };
            return make_pencil(parse_matrix<Fp>(j.at("Q"), entry),
                               parse_matrix<Fp>(j.at("Qp"), entry));
        }
        throw std::invalid_argument("field.type must be \"Q\" or \"Fp\"");
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid pencil JSON: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("invalid pencil JSON: ") + e.what());
    }
}

std::string classification_to_json(const Classification<Rational>& c, bool pretty) {
    return classification_to_json_impl(c, pretty);
}

std::string classification_to_json(const Classification<Fp>& c, bool pretty) {
    return classification_to_json_impl(c, pretty);
}

std::string trial_report_to_json(const TrialReport& r, bool pretty) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"trial", f.trial}, {"seed", f.seed}, {"reason", f.reason}});
    const json j{{"check", r.check},
                 {"trials", r.trials},
                 {"successes", r.successes},
                 {"failures", failures},
                 {"elapsed", r.elapsed_seconds}};
    return pretty ? j.dump(2) : j.dump();
}

std::string table_report_to_json(const Table1Report& r, bool pretty) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(json{{"orbit", orbit_code(row.orbit)},
                            {"name", orbit_name(row.orbit)},
                            {"base_locus", row.base_locus},
                            {"codim", row.codim},
                            {"class", to_text(row.cls, false)},
                            {"computed", row.computed},
                            {"degree", row.degree},
                            {"expected_degree", row.expected_degree},
                            {"ok", row.ok()}});
    }
    const json j{{"rows", rows},
                 {"fano",
                  json{{"principal_parts", to_text(r.fano_principal_parts, false)},
                       {"sym3", to_text(r.fano_sym3, false)},
                       {"zeta_part_zero", r.fano_zeta_part_zero},
                       {"routes_agree", r.fano_routes_agree},
                       {"degree", r.fano_degree}}},
                 {"all_ok", r.all_ok()}};
    return pretty ? j.dump(2) : j.dump();
}

std::string table_report_to_text(const Table1Report& r) {
    std::string out;
    for (const auto& row : r.rows) {
        std::string line = orbit_code(row.orbit);
        line += "  codim " + std::to_string(row.codim);
        line += "  class " + to_text(row.cls, false);
        line += row.computed ? "  (computed)" : "  (stored)";
        line += "  degree " + std::to_string(row.degree);
        line += " expected " + std::to_string(row.expected_degree);
        line += row.ok() ? "  PASS" : "  FAIL";
        line += "\n";
        out += line;
    }
    out += "fano class " + to_text(r.fano_principal_parts, false) + " degree " +
           std::to_string(r.fano_degree) + "; routes " +
           (r.fano_routes_agree && r.fano_zeta_part_zero ? "agree  PASS" : "disagree  FAIL") +
           "\n";
    out += r.all_ok() ? "table: PASS\n" : "table: FAIL\n";
    return out;
}

}  // namespace pencils
