#include "pencils/classifier.hpp"

namespace pencils {

namespace {

constexpr int index_of(Orbit o) { return static_cast<int>(o) - 1; }

constexpr const char* kNames[8] = {"general",
                                   "simply tangent",
                                   "bitangent",
                                   "osculating",
                                   "superosculating",
                                   "double-line-pair",
                                   "line-plus-point",
                                   "line-plus-embedded-point"};

constexpr const char* kBaseLocus[8] = {"(1,1,1,1)",
                                       "(2,1,1)",
                                       "(2,2)",
                                       "(3,1)",
                                       "(4)",
                                       "{*}",
                                       "L∪{*}: *∉L",
                                       "L∪{*}: *∈L"};

constexpr int kCodim[8] = {0, 1, 2, 2, 3, 4, 4, 5};

}  // namespace

std::string orbit_code(Orbit o) { return "O" + std::to_string(static_cast<int>(o)); }

std::string orbit_name(Orbit o) { return kNames[index_of(o)]; }

std::string base_locus_descriptor(Orbit o) { return kBaseLocus[index_of(o)]; }

int orbit_codim(Orbit o) { return kCodim[index_of(o)]; }

std::optional<Orbit> orbit_from_code(const std::string& code) {
    for (const Orbit o : all_orbits)
        if (orbit_code(o) == code) return o;
    return std::nullopt;
}

}  // namespace pencils
