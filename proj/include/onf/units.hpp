#pragma once

#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>

#include "onf/constants.hpp"
#include "onf/errors.hpp"

namespace onf::units {

enum class Dimension {
    Length,
    Power,
    Angle,
    Time,
    Frequency,  // ordinary frequency; callers convert to angular where needed
    Temperature,
    Intensity,
    Mass,
};

inline const char* dimension_name(Dimension d) {
    switch (d) {
        case Dimension::Length: return "length";
        case Dimension::Power: return "power";
        case Dimension::Angle: return "angle";
        case Dimension::Time: return "time";
        case Dimension::Frequency: return "frequency";
        case Dimension::Temperature: return "temperature";
        case Dimension::Intensity: return "intensity";
        case Dimension::Mass: return "mass";
    }
    return "?";
}

namespace detail {

inline const std::map<std::string, double>& unit_table(Dimension d) {
    using constants::amu;
    static const std::map<std::string, double> length = {
        {"nm", 1e-9}, {"um", 1e-6}, {"µm", 1e-6}, {"mm", 1e-3}, {"cm", 1e-2}, {"m", 1.0}};
    static const std::map<std::string, double> power = {
        {"nW", 1e-9}, {"uW", 1e-6}, {"µW", 1e-6}, {"mW", 1e-3}, {"W", 1.0}};
    static const std::map<std::string, double> angle = {
        {"deg", constants::pi / 180.0}, {"mrad", 1e-3}, {"rad", 1.0}};
    static const std::map<std::string, double> time = {
        {"ns", 1e-9}, {"us", 1e-6}, {"µs", 1e-6}, {"ms", 1e-3}, {"s", 1.0}};
    static const std::map<std::string, double> freq = {
        {"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}, {"THz", 1e12}};
    static const std::map<std::string, double> temp = {
        {"nK", 1e-9}, {"uK", 1e-6}, {"µK", 1e-6}, {"mK", 1e-3}, {"K", 1.0}};
    static const std::map<std::string, double> inten = {
        {"W/m^2", 1.0}, {"W/m2", 1.0}, {"mW/cm^2", 10.0}, {"mW/cm2", 10.0}};
    static const std::map<std::string, double> mass = {
        {"kg", 1.0}, {"u", amu}, {"Da", amu}};
    switch (d) {
        case Dimension::Length: return length;
        case Dimension::Power: return power;
        case Dimension::Angle: return angle;
        case Dimension::Time: return time;
        case Dimension::Frequency: return freq;
        case Dimension::Temperature: return temp;
        case Dimension::Intensity: return inten;
        case Dimension::Mass: return mass;
    }
    return length;
}

}  // namespace detail

// Parses "235 nm", "-80nm", "+200 MHz", "1e-3 W", "2.503 mW/cm^2".
// A bare number (no unit suffix) is rejected: physical quantities must
// carry explicit units in config files.
inline double parse_quantity(std::string_view text, Dimension dim,
                             std::string_view field = "") {
    auto fail = [&](const std::string& why) -> double {
        std::string where = field.empty() ? "" : " in field '" + std::string(field) + "'";
        throw UnitError("bad " + std::string(dimension_name(dim)) + " quantity '" +
                        std::string(text) + "'" + where + ": " + why);
    };

    const std::string s(text);
    const char* p = s.c_str();
    char* end = nullptr;
    double value = std::strtod(p, &end);
    if (end == p) return fail("no numeric value");

    std::string unit(end);
    // trim surrounding whitespace
    size_t b = unit.find_first_not_of(" \t");
    if (b == std::string::npos)
        return fail("missing unit suffix (bare numbers are not accepted)");
    size_t e = unit.find_last_not_of(" \t");
    unit = unit.substr(b, e - b + 1);

    const auto& table = detail::unit_table(dim);
    auto it = table.find(unit);
    if (it == table.end()) return fail("unknown unit '" + unit + "'");
    return value * it->second;
}

}  // namespace onf::units
