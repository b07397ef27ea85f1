// Copyright 2026 The pgjk Authors
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

#ifndef PGJK_RATIONAL_HPP
#define PGJK_RATIONAL_HPP

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgjk/errors.hpp"

namespace pgjk {

/// Exact arbitrary-precision rational used for every worth and index value.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses "p", "-p", "p/q" or "-p/q". Decimals are rejected on purpose:
/// every value must be exact.
inline Rational parse_rational(std::string_view text) {
  using boost::multiprecision::cpp_int;
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!detail::is_integer_literal(num) ||
      (slash != std::string_view::npos &&
       (!detail::is_integer_literal(den) || den.front() == '-' ||
        den.front() == '+'))) {
    throw GameError(Errc::ParseError,
                    "not a rational literal: \"" + std::string(text) + "\"");
  }
  const std::string num_s(num.front() == '+' ? num.substr(1) : num);
  cpp_int p(num_s);
  cpp_int q = 1;
  if (slash != std::string_view::npos) q = cpp_int(std::string(den));
  if (q == 0) {
    throw GameError(Errc::ParseError,
                    "zero denominator: \"" + std::string(text) + "\"");
  }
  return Rational(p, q);
}

}  // namespace pgjk

#endif  // PGJK_RATIONAL_HPP
