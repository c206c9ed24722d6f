//------------------------------------------------------------------------------
//
//   Copyright 2026 the bidmatch authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "market/rational.hpp"

#include <cctype>
#include <ostream>

namespace market {

namespace {

bool valid_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<Rat> Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_decimal(text)) return std::nullopt;
    return Rat(mpq_class(mpz_class{std::string(text)}, 1));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!valid_decimal(num) || !valid_decimal(den)) return std::nullopt;
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) return std::nullopt;
  return Rat(mpq_class(n, d));
}

std::string Rat::str() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.str(); }

mpz_class denominator_lcm(const std::vector<Rat> &values) {
  mpz_class l = 1;
  for (const Rat &v : values) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    l = l / g * v.denominator();
  }
  return l;
}

}  // namespace market
