// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace kradius {

// Base for every domain error raised by the library. Precondition
// violations on plain arguments use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KRADIUS_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

KRADIUS_DEFINE_ERROR(NoSolution);
KRADIUS_DEFINE_ERROR(AlphabetViolation);
KRADIUS_DEFINE_ERROR(NotVerified);
KRADIUS_DEFINE_ERROR(CoverIncomplete);
KRADIUS_DEFINE_ERROR(NotKRadiusPrime);
KRADIUS_DEFINE_ERROR(BudgetExceeded);
KRADIUS_DEFINE_ERROR(BadPrime);
KRADIUS_DEFINE_ERROR(NotBijective);
KRADIUS_DEFINE_ERROR(ParseError);

#undef KRADIUS_DEFINE_ERROR

}  // namespace kradius
