// Copyright 2026 The geninv Authors.
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

#ifndef GENINV_ERRORS_HPP_
#define GENINV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace geninv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for the input.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class ZeroMatrix : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class IndexTooLarge : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// Two routes to the same quantity disagree. Signals an internal bug.
class ClosedFormMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace geninv

#endif  // GENINV_ERRORS_HPP_
