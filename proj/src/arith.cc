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

#include "nwe/arith.h"

#include <stdexcept>

namespace nwe {

std::string rational_str(const Rational &r) {
    const auto den = boost::multiprecision::denominator(r);
    std::string out = boost::multiprecision::numerator(r).str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

Rational parse_rational(const std::string &text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + text + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error &) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

}  // namespace nwe
