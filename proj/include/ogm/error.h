// Copyright 2026 The OGM Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ogm {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit count (or state dimension).
struct DimensionError : Error {
    using Error::Error;
};

/// Malformed text input. `position` is 1-based (character or line, see message).
struct ParseError : Error {
    ParseError(const std::string &msg, std::size_t position)
        : Error(msg), position(position) {
    }
    std::size_t position;
};

/// join() was asked to merge two Pauli strings that share no covering basis.
struct IncompatibleError : Error {
    using Error::Error;
};

/// A documented precondition was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

/// Iterative numerics failed to converge or hit an inconsistent state.
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace ogm
