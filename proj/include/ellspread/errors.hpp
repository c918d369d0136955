// Copyright 2026 The ellspread Authors
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

namespace ellspread {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: bad degrees, malformed chains, out-of-range indices.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a configured size budget (field degree, scan size).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Mathematically undefined input, e.g. inverting zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an object that does not satisfy its
/// documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction produced an object that violates a structural invariant.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ellspread
