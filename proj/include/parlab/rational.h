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

#ifndef PARLAB_RATIONAL_H_
#define PARLAB_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"

namespace parlab {

// Exact rational with arbitrary-precision numerator and denominator. Always
// kept canonical (gcd 1, positive denominator).
using Rational = mpq_class;

// Accepts "n", "n/d" and a leading sign. Rejects zero denominators.
absl::StatusOr<Rational> ParseRational(absl::string_view text);

// "n/d", or "n" when the denominator is 1.
std::string FormatRational(const Rational& q);

// Fixed-point rendering, rounded half away from zero.
std::string FormatDecimal(const Rational& q, int places = 6);

// 2^e for any integer e.
Rational Pow2(int e);

inline Rational MakeRational(std::int64_t num, std::int64_t den = 1) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

}  // namespace parlab

#endif  // PARLAB_RATIONAL_H_
