/*
   Copyright 2026 The grembed Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GREMBED_ERROR_HPP
#define GREMBED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grembed {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Inverse or exact quotient requested where none exists.
class NotAUnit : public Error {
 public:
  using Error::Error;
};

/// Enumeration requested over an infinite ring.
class InfiniteRing : public Error {
 public:
  using Error::Error;
};

/// Shapes of matrices or points do not fit the operation.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside the documented domain of the operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A column span is not a free direct summand of the expected rank
/// (no unit maximal minor), so it has no normal form.
class NotFreeSpan : public Error {
 public:
  using Error::Error;
};

/// The symmetric power of a point fails to be a free direct summand.
/// Only possible over non-reduced rings in the m = 1, p | r regime.
class DegenerateImage : public NotFreeSpan {
 public:
  using NotFreeSpan::NotFreeSpan;
};

/// Malformed JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace grembed

#endif  // GREMBED_ERROR_HPP
