// Copyright 2026 The Authors.
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

#include "submod/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "submod/errors.hpp"

namespace submod {

namespace {

bool is_valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (!is_valid_integer_text(num) || !is_valid_integer_text(den)) {
    throw SubmodError(ErrorCode::BadArgument,
                      "cannot parse rational '" + text + "'");
  }
  Integer p(num);
  Integer q(den);
  if (q == 0) {
    throw SubmodError(ErrorCode::BadArgument,
                      "zero denominator in '" + text + "'");
  }
  return Rational(p, q);  // the (num, den) constructor canonicalizes
}

std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw SubmodError(ErrorCode::BadArgument, "non-finite double");
  }
  if (value == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(value, &exp);  // value = mant * 2^exp, |mant| in [1/2,1)
  // 53 doublings make the mantissa integral.
  Integer m(static_cast<long long>(std::ldexp(mant, 53)));
  exp -= 53;
  Rational result(m);
  Integer two(2);
  if (exp >= 0) {
    result *= Rational(pow(two, exp));
  } else {
    result /= Rational(pow(two, -exp));
  }
  return result;
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Rational positive_part(const Rational& value) {
  return value > 0 ? value : Rational(0);
}

Rational negative_part(const Rational& value) {
  return value < 0 ? Rational(-value) : Rational(0);
}

Rational abs_value(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::NegativeCapacity: return "NegativeCapacity";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::NotConcave: return "NotConcave";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::NotPD: return "NotPD";
    case ErrorCode::InvalidKernel: return "InvalidKernel";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::GroundMismatch: return "GroundMismatch";
    case ErrorCode::NotSubmodular: return "NotSubmodular";
    case ErrorCode::NotSupermodular: return "NotSupermodular";
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::NotDiverging: return "NotDiverging";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::BadCoefficient: return "BadCoefficient";
    case ErrorCode::NotComonotonic: return "NotComonotonic";
    case ErrorCode::SandwichViolated: return "SandwichViolated";
    case ErrorCode::BetaNotMinorizing: return "BetaNotMinorizing";
    case ErrorCode::NotMinorizing: return "NotMinorizing";
    case ErrorCode::NotAMatroidRank: return "NotAMatroidRank";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NotSubadditive: return "NotSubadditive";
    case ErrorCode::NormalizationViolated: return "NormalizationViolated";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace submod
