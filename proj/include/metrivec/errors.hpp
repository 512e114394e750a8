// Copyright 2026 The metrivec Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace metrivec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad interval, ordering or parameter range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Vectors of different representations or shapes were combined.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation needs something the input cannot provide (a witness
/// oracle, enough truncation dimension, ...).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A constructed value breaks its own invariant (e.g. a tag outside its interval).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// An adversarial construction could not be completed.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Malformed identifier or command-line input.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace metrivec
