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

#pragma once

#include <string>

namespace gatefid {

// Units are mandatory on dimensioned config values; everything is
// canonicalized to SI (seconds, 1/s, rad/s) on parse.

/// "250 ns", "1.5 us", "0.05 ms", "2e-7 s"  ->  seconds
double parse_time(const std::string& text);

/// "5398 /s", "0.02 /us", "1/s", "20 kHz" (plain rates are 1/s)  ->  1/s
double parse_rate(const std::string& text);

/// "2pi*3.5 MHz", "3.5 MHz*2pi", "1.2e7 rad/s"  ->  rad/s
double parse_angular_frequency(const std::string& text);

}  // namespace gatefid
