// Copyright 2026 The seccrit Authors
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

#ifndef SECCRIT_REPORT_HPP
#define SECCRIT_REPORT_HPP

#include <string>

#include "seccrit/bounds.hpp"

// Rendering of guarantee reports: a human-readable table and a
// machine-readable JSON document with stable field names. Both are
// deterministic byte for byte given the same inputs and precision.

namespace seccrit {

// value formatted with `precision` significant digits ("%.*g").
std::string format_sig(double value, int precision);

// value rounded to what format_sig would print; keeps machine-readable
// numbers in step with the requested precision.
double round_sig(double value, int precision);

std::string render_report_text(const GuaranteeReport& report, int precision);
std::string render_report_json(const GuaranteeReport& report, int precision);

}  // namespace seccrit

#endif  // SECCRIT_REPORT_HPP
