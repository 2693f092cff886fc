// Copyright 2026 The NWE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NWE_ARITH_H
#define NWE_ARITH_H

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nwe {

/// Arbitrary-precision integer. Inner products and constraint coefficients never overflow.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational used by the nullspace solver.
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p/q", or "p" when the denominator is one.
std::string rational_str(const Rational &r);

/// Inverse of rational_str. Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string &text);

}  // namespace nwe

#endif
