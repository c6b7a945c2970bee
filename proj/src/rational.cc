// Copyright 2026 The par-lab Authors
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

#include "parlab/rational.h"

#include <string>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace parlab {
namespace {

bool ParseInteger(absl::string_view text, mpz_class* out) {
  absl::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) return false;
  for (char ch : digits) {
    if (!absl::ascii_isdigit(static_cast<unsigned char>(ch))) return false;
  }
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return out->set_str(s, 10) == 0;
}

}  // namespace

absl::StatusOr<Rational> ParseRational(absl::string_view text) {
  text = absl::StripAsciiWhitespace(text);
  const std::size_t slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  const bool ok = slash == absl::string_view::npos
                      ? ParseInteger(text, &num)
                      : ParseInteger(text.substr(0, slash), &num) && ParseInteger(text.substr(slash + 1), &den);
  if (!ok) return absl::InvalidArgumentError(absl::StrCat("bad rational '", text, "'"));
  if (den == 0) return absl::InvalidArgumentError(absl::StrCat("zero denominator in '", text, "'"));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string FormatRational(const Rational& q) { return q.get_str(10); }

std::string FormatDecimal(const Rational& q, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const bool negative = sgn(q) < 0;
  Rational scaled = abs(q) * scale;
  // floor(scaled + 1/2)
  mpz_class twice = 2 * scaled.get_num() + scaled.get_den();
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * scaled.get_den()).get_mpz_t());
  mpz_class whole;
  mpz_class frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), rounded.get_mpz_t(), scale.get_mpz_t());
  std::string out = negative && rounded != 0 ? "-" : "";
  absl::StrAppend(&out, whole.get_str());
  if (places > 0) {
    std::string f = frac.get_str();
    absl::StrAppend(&out, ".", std::string(places - f.size(), '0'), f);
  }
  return out;
}

Rational Pow2(int e) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational q(mpz_class(1), p);
  q.canonicalize();
  return q;
}

}  // namespace parlab
