// Copyright 2026 The gatefid developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gatefid/units.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "gatefid/core.hpp"

namespace gatefid {

namespace {

struct Split {
    double value;
    std::string unit;  // lowercased, whitespace stripped
};

Split split_value_unit(const std::string& text, const char* what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin)
        throw ValidationError(std::string(what) + ": cannot parse number in '" + text + "'");
    std::string unit;
    for (const char* c = end; *c; ++c)
        if (!std::isspace(static_cast<unsigned char>(*c)))
            unit += static_cast<char>(std::tolower(static_cast<unsigned char>(*c)));
    if (unit.empty())
        throw ValidationError(std::string(what) + ": unit is mandatory in '" + text + "'");
    return {value, unit};
}

}  // namespace

double parse_time(const std::string& text) {
    const Split s = split_value_unit(text, "time");
    if (s.unit == "s") return s.value;
    if (s.unit == "ms") return s.value * 1e-3;
    if (s.unit == "us" || s.unit == "\xc2\xb5s") return s.value * 1e-6;
    if (s.unit == "ns") return s.value * 1e-9;
    throw ValidationError("time: unknown unit '" + s.unit + "' (use s, ms, us, ns)");
}

double parse_rate(const std::string& text) {
    const Split s = split_value_unit(text, "rate");
    if (s.unit == "/s" || s.unit == "1/s" || s.unit == "s^-1") return s.value;
    if (s.unit == "/ms" || s.unit == "1/ms" || s.unit == "ms^-1") return s.value * 1e3;
    if (s.unit == "/us" || s.unit == "1/us" || s.unit == "us^-1" || s.unit == "/\xc2\xb5s")
        return s.value * 1e6;
    if (s.unit == "/ns" || s.unit == "1/ns" || s.unit == "ns^-1") return s.value * 1e9;
    if (s.unit == "hz") return s.value;
    if (s.unit == "khz") return s.value * 1e3;
    if (s.unit == "mhz") return s.value * 1e6;
    throw ValidationError("rate: unknown unit '" + s.unit +
                          "' (use /s, /ms, /us, /ns, Hz, kHz, MHz)");
}

double parse_angular_frequency(const std::string& text) {
    // accept the 2pi factor on either side: "2pi*3.5 MHz" or "3.5 MHz*2pi"
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    double two_pi = 1.0;
    if (compact.rfind("2pi*", 0) == 0) {
        two_pi = 2.0 * M_PI;
        compact = compact.substr(4);
    }
    Split s = split_value_unit(compact, "frequency");
    auto strip = [&](const std::string& token) {
        const auto pos = s.unit.find(token);
        if (pos != std::string::npos) {
            s.unit.erase(pos, token.size());
            two_pi = 2.0 * M_PI;
            return true;
        }
        return false;
    };
    strip("*2pi") || strip("2pi*") || strip("2pi");
    if (s.unit == "rad/s") {
        if (two_pi != 1.0)
            throw ValidationError("frequency: rad/s already angular, drop the 2pi in '" + text +
                                  "'");
        return s.value;
    }
    double hz = 0.0;
    if (s.unit == "hz") hz = s.value;
    else if (s.unit == "khz") hz = s.value * 1e3;
    else if (s.unit == "mhz") hz = s.value * 1e6;
    else if (s.unit == "ghz") hz = s.value * 1e9;
    else
        throw ValidationError("frequency: unknown unit in '" + text +
                              "' (use rad/s or 2pi*{Hz,kHz,MHz,GHz})");
    if (two_pi == 1.0)
        throw ValidationError("frequency: couplings must be angular; write '2pi*" + text +
                              "' or use rad/s");
    return hz * two_pi;
}

}  // namespace gatefid
