// Copyright 2026 The topostab Authors
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

#ifndef TOPOSTAB_ERRORS_H
#define TOPOSTAB_ERRORS_H

#include <stdexcept>

namespace topostab {

/// A file could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A lattice file or lattice value violates the structural schema.
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A lattice failed overlap-parity or membership validation, or its
/// generators do not commute.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace topostab

#endif
