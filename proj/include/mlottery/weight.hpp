// Copyright 2026 The mlottery Authors
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

#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mlottery {

// Exact population weight. Counts and shares are kept rational so that
// pairwise identities and ties hold without rounding.
using Weight = boost::rational<std::int64_t>;

inline double to_double(const Weight& w) {
  return static_cast<double>(w.numerator()) /
         static_cast<double>(w.denominator());
}

namespace detail {

inline std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace detail

// Accepts "7", "-2", "0.33", "1/3". Decimals are read exactly, so "0.33" is
// 33/100 and not the nearest double.
inline Weight parse_weight(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty weight");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = detail::parse_int(text.substr(0, slash));
    std::int64_t den = detail::parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in weight");
    return Weight(num, den);
  }
  if (text.find_first_of("eE") != std::string_view::npos) {
    throw std::invalid_argument("exponent notation not supported in weight '" +
                                std::string(text) + "'");
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Weight(detail::parse_int(text));
  std::string digits(text.substr(0, dot));
  std::string_view frac = text.substr(dot + 1);
  if (frac.size() > 15) {
    throw std::invalid_argument("too many decimals in weight '" +
                                std::string(text) + "'");
  }
  digits += frac;
  if (digits.empty() || digits == "-") {
    throw std::invalid_argument("bad weight '" + std::string(text) + "'");
  }
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  return Weight(detail::parse_int(digits), den);
}

// Integers print bare, everything else as "p/q".
inline std::string format_weight(const Weight& w) {
  if (w.denominator() == 1) return std::to_string(w.numerator());
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

}  // namespace mlottery
