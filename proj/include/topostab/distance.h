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

#ifndef TOPOSTAB_DISTANCE_H
#define TOPOSTAB_DISTANCE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "topostab/pauli.h"
#include "topostab/stabilizer_code.h"

namespace topostab {

using Rational = boost::rational<std::int64_t>;

/// Exact n/d^2. Throws std::invalid_argument for d == 0.
Rational rate(size_t n, size_t d);

/// "p/q", or "p" when q == 1.
std::string format_rational(const Rational &r);

enum class DistanceMethod { enumeration, oracle };

std::string_view to_string(DistanceMethod m);

struct CodeParams {
    size_t n = 0;
    size_t k = 0;
    /// Empty when no undetectable error of weight <= w_max exists.
    std::optional<size_t> d;
    size_t w_max = 0;
    /// A minimum-weight element of Z - S, present whenever d is.
    std::optional<PauliOperator> certificate;
    DistanceMethod method = DistanceMethod::enumeration;

    /// floor((d - 1) / 2); requires d.
    size_t t() const;
    /// n / d^2; requires d.
    Rational rate_c() const;
    /// "[[n,k,d]]", or "[[n,k,>w]]" when d exceeds the cap.
    std::string bracket() const;
};

constexpr size_t kDefaultWeightCap = 12;

/// Minimum weight of an undetectable error, by ascending-weight support
/// enumeration in the pure-X and pure-Z sectors.
///
/// Weight w is fully searched in the X sector and then the Z sector before
/// moving to w + 1. Within a sector the lexicographically least support is
/// reported for any `workers` count (0 picks the hardware concurrency).
/// Work is split by the first support index.
CodeParams distance(const StabilizerCode &code, size_t w_max = kDefaultWeightCap, size_t workers = 0);

constexpr size_t kOracleMaxQubits = 24;

/// Exhaustive minimum over all 2^n vectors of each sector. Uses only raw
/// word masks and an explicit span of the generators, never the echelon
/// forms used by distance(). Throws std::invalid_argument for n > 24.
CodeParams distance_oracle(const StabilizerCode &code);

}  // namespace topostab

#endif
