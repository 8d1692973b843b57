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

#ifndef TOPOSTAB_REPORT_H
#define TOPOSTAB_REPORT_H

#include <optional>
#include <string>
#include <vector>

#include "topostab/distance.h"
#include "topostab/families.h"

namespace topostab {

constexpr std::string_view kVersion = "topostab 1.0.0";

/// One headline row of the torus/planar comparison: a family instance,
/// the parameters certified for it from scratch and the reference value.
struct PaperTableRow {
    std::string label;
    FamilySpec family;
    Predicted expected;
    Rational paper_c;
    /// Asymptotic rows compare the family's closed-form limit of n/d^2,
    /// exact rows the instance's own n/d^2.
    bool asymptotic = false;

    CodeParams params;
    /// Empty if the lattice could not be turned into a code.
    std::optional<std::string> error;
    Rational instance_c;
    Rational compared_c;
    bool match = false;
};

struct KDoubling {
    size_t k_color = 0;
    size_t k_surface = 0;
    bool match = false;
};

struct PaperTable {
    std::vector<PaperTableRow> rows;
    KDoubling k_doubling;
    bool all_match() const;
};

struct PaperTableOptions {
    size_t w_max = kDefaultWeightCap;
    size_t workers = 0;
    /// Test hook: drop one qubit from the first plaquette of this family.
    std::optional<FamilyId> corrupt;
};

/// Builds every instance, derives its code, certifies d and compares.
PaperTable compute_paper_table(const PaperTableOptions &options = {});

}  // namespace topostab

#endif
