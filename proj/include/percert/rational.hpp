// Copyright 2026 The percert Authors
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

#ifndef PERCERT_RATIONAL_HPP
#define PERCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace percert {

/// Arbitrary-precision exact rational. Always kept canonical.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws Error(parse) on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

}  // namespace percert

#endif  // PERCERT_RATIONAL_HPP
