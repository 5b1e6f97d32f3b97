// Copyright 2026 The qssr Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qssr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A register, state or enumeration would exceed a configured size limit.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Gate wires overlap, fall outside the register, or circuits disagree on width.
class WiringError : public Error {
  public:
    using Error::Error;
};

/// An instance or run configuration violates its documented constraints.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A numeric argument is outside its admissible range.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// A register is too narrow to hold the values an arithmetic circuit produces.
class LayoutError : public Error {
  public:
    using Error::Error;
};

}  // namespace qssr
