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

#ifndef TOPOSTAB_FAMILIES_H
#define TOPOSTAB_FAMILIES_H

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <optional>
#include <string_view>
#include <vector>

#include "topostab/distance.h"
#include "topostab/lattice.h"

namespace topostab {

enum class FamilyId {
    toric_surface_standard,
    toric_surface_rotated,
    toric_color_hex,
    toric_color_optimal,
    planar_surface_standard,
    planar_surface_rotated,
    triangular_color,
};

constexpr std::array<FamilyId, 7> kAllFamilies = {
    FamilyId::toric_surface_standard, FamilyId::toric_surface_rotated,   FamilyId::toric_color_hex,
    FamilyId::toric_color_optimal,    FamilyId::planar_surface_standard, FamilyId::planar_surface_rotated,
    FamilyId::triangular_color,
};

std::string_view to_string(FamilyId id);
/// Throws std::invalid_argument for unknown ids.
FamilyId parse_family(std::string_view text);
bool is_torus(FamilyId id);

/// Closed forms in the size parameter p: n = n2 p^2 + n1 p + n0 and
/// d = d1 p.
struct ClosedForm {
    Rational n2, n1, n0;
    std::int64_t d1;
    size_t k;

    Rational n_at(std::int64_t p) const;
    /// lim n/d^2 as p grows: n2 / d1^2.
    Rational rate_limit() const;
};

ClosedForm closed_form(FamilyId id);

struct FamilySpec {
    FamilyId id;
    /// L for toric-surface-standard, l for the honeycomb tori, d otherwise.
    std::int64_t param;
};

struct Predicted {
    size_t n;
    size_t k;
    size_t d;
};

/// Throws std::invalid_argument when the parameter is outside the family's
/// range (e.g. odd d for toric-surface-rotated, even d for triangular).
void check_param(const FamilySpec &spec);
Predicted predicted(const FamilySpec &spec);

/// Builds the lattice for one family member. Meta records the family, its
/// parameter, genus, a drawing layout and, on the torus, the period.
Lattice build(const FamilySpec &spec);

/// Triangular patch of the 6.6.6 lattice with three colored borders, odd
/// d >= 3. Lattice points (a, b) with a, b >= 0 and a + b <= 3(d - 1)/2;
/// those with a - b = 1 mod 3 are hexagon centers, the rest qubits.
Lattice triangular_patch(std::int64_t d, std::map<std::string, std::string> meta = {});

/// A full-rank sublattice of the triangular lattice of hexagon centers,
/// in Hermite normal form: rows (alpha, beta) and (0, gamma) with
/// 0 <= beta < gamma.
struct Sublattice {
    std::int64_t alpha;
    std::int64_t beta;
    std::int64_t gamma;

    std::int64_t index() const {
        return alpha * gamma;
    }
    bool operator==(const Sublattice &) const = default;
    auto operator<=>(const Sublattice &) const = default;
};

/// HNF of the lattice spanned by two integer vectors (a, b) in the basis
/// e1 = (1, 0), e2 = (1/2, sqrt(3)/2). Throws if they are dependent.
Sublattice hermite_normal_form(std::array<std::int64_t, 2> t1, std::array<std::int64_t, 2> t2);

/// Hexagon color (a - b) mod 3 is preserved by every translation.
bool preserves_coloring(const Sublattice &s);

/// Every color-preserving sublattice of the given index, ascending.
std::vector<Sublattice> color_preserving_sublattices(std::int64_t index);

/// Honeycomb torus: one hexagon per coset of `s`, two qubits per hexagon.
/// The result may fail validation for tiny or skewed sublattices.
Lattice honeycomb_torus(const Sublattice &s);

struct SublatticeCandidate {
    Sublattice sublattice;
    bool valid;
    size_t k;
    std::optional<size_t> d;
};

/// Evaluates every color-preserving sublattice of the index and returns
/// all of them together with the least one reaching distance `target_d`.
struct SublatticeSearch {
    std::vector<SublatticeCandidate> candidates;
    std::optional<Sublattice> chosen;
};
SublatticeSearch search_honeycomb_base(std::int64_t index, size_t target_d, size_t workers = 0);

/// Base sublattices fixed by search_honeycomb_base(12, 4) and (9, 4).
Sublattice hex_base_sublattice();
Sublattice optimal_base_sublattice();

}  // namespace topostab

#endif
