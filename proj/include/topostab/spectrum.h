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

#ifndef TOPOSTAB_SPECTRUM_H
#define TOPOSTAB_SPECTRUM_H

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topostab/stabilizer_code.h"

namespace topostab {

using BigInt = boost::multiprecision::cpp_int;

struct EnergyLevel {
    std::int64_t energy;
    BigInt degeneracy;

    bool operator==(const EnergyLevel &) const = default;
};

/// Spectrum of H = -(sum of all stabilizer generators), ascending energy.
struct SpectrumReport {
    size_t n = 0;
    size_t k = 0;
    std::vector<EnergyLevel> levels;

    std::int64_t ground_energy() const;
    BigInt ground_degeneracy() const;
    /// First excited minus ground energy; 0 when there is a single level.
    std::int64_t gap() const;
    BigInt total_degeneracy() const;

    bool operator==(const SpectrumReport &) const = default;
};

/// Exact spectrum from commutation alone.
///
/// Each sector's sign patterns are the vectors orthogonal to its relation
/// space (kernel of the transposed generator matrix); every pattern carries
/// degeneracy 2^k. Pattern weights are enumerated on whichever of the
/// pattern space and relation space is smaller, using the MacWilliams
/// transform in the latter case.
SpectrumReport spectrum(const StabilizerCode &code);

constexpr size_t kDenseMaxQubits = 12;

/// Builds the 2^n x 2^n Hamiltonian and diagonalizes it numerically.
/// Eigenvalues must round to integers within 1e-9. Throws
/// std::invalid_argument for n > 12.
SpectrumReport dense_check(const StabilizerCode &code);

/// "topostab-spectrum/1" document.
std::string to_json(const SpectrumReport &report);
SpectrumReport spectrum_from_json(std::string_view text);

}  // namespace topostab

#endif
