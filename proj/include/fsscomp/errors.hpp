// Copyright 2026 The fsscomp Authors
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

#ifndef FSSCOMP_ERRORS_HPP
#define FSSCOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsscomp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad datasheet, bad grid size, ...).
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// The requested configuration is unphysical, e.g. 1 + eta*V(t) <= 0 during transit.
class PhysicsError : public Error {
   public:
    using Error::Error;
};

/// The cell cannot produce the requested frequency shift (eta == 0).
class UncorrectableCell : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

/// Root finding or an eigen solver failed to converge.
class NumericalError : public Error {
   public:
    using Error::Error;
};

/// Run configuration is malformed. Carries the offending field path and,
/// when it can be located in the source text, a 1-based line number (0 if unknown).
class ConfigError : public Error {
   public:
    ConfigError(std::string field, int line, const std::string &message)
        : Error(message), field_(std::move(field)), line_(line) {}

    const std::string &field() const { return field_; }
    int line() const { return line_; }

   private:
    std::string field_;
    int line_;
};

}  // namespace fsscomp

#endif
