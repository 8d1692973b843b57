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

#include "topostab/report.h"

#include <stdexcept>

#include "topostab/stabilizer_code.h"

namespace topostab {

namespace {

struct RowSpec {
    const char *label;
    FamilySpec family;
    Predicted expected;
    Rational paper_c;
    bool asymptotic;
};

std::vector<RowSpec> headline_rows() {
    return {
        {"torus-surface", {FamilyId::toric_surface_standard, 4}, {32, 2, 4}, Rational(2), false},
        {"torus-color", {FamilyId::toric_color_hex, 1}, {24, 4, 4}, Rational(3, 2), false},
        {"torus-surface-optimal", {FamilyId::toric_surface_rotated, 4}, {16, 2, 4}, Rational(1), false},
        {"torus-color-optimal", {FamilyId::toric_color_optimal, 1}, {18, 4, 4}, Rational(9, 8), false},
        {"planar-surface", {FamilyId::planar_surface_standard, 5}, {41, 1, 5}, Rational(2), true},
        {"planar-surface-optimal", {FamilyId::planar_surface_rotated, 5}, {25, 1, 5}, Rational(1), false},
        {"planar-color-optimal", {FamilyId::triangular_color, 7}, {37, 1, 7}, Rational(3, 4), true},
    };
}

Lattice drop_one_qubit(const Lattice &lat) {
    std::vector<Plaquette> plaquettes(lat.plaquettes().begin(), lat.plaquettes().end());
    if (!plaquettes.empty() && plaquettes.front().qubits.size() > 1) {
        plaquettes.front().qubits.pop_back();
    }
    return Lattice(lat.kind(), lat.num_qubits(), std::move(plaquettes), lat.meta());
}

}  // namespace

bool PaperTable::all_match() const {
    for (const auto &row : rows) {
        if (!row.match) {
            return false;
        }
    }
    return k_doubling.match;
}

PaperTable compute_paper_table(const PaperTableOptions &options) {
    PaperTable table;
    std::optional<size_t> k_color;
    std::optional<size_t> k_surface;
    bool torus_k_consistent = true;
    for (const auto &spec : headline_rows()) {
        PaperTableRow row;
        row.label = spec.label;
        row.family = spec.family;
        row.expected = spec.expected;
        row.paper_c = spec.paper_c;
        row.asymptotic = spec.asymptotic;
        try {
            Lattice lat = build(spec.family);
            if (options.corrupt == spec.family.id) {
                lat = drop_one_qubit(lat);
            }
            auto code = StabilizerCode::from_lattice(std::move(lat));
            row.params = distance(code, options.w_max, options.workers);
        } catch (const std::invalid_argument &e) {
            row.error = e.what();
        }
        if (!row.error && row.params.d) {
            row.instance_c = row.params.rate_c();
            auto form = closed_form(spec.family.id);
            row.compared_c = spec.asymptotic ? form.rate_limit() : row.instance_c;
            bool closed_form_agrees = form.n_at(spec.family.param) == Rational(static_cast<std::int64_t>(row.params.n));
            row.match = row.params.n == spec.expected.n && row.params.k == spec.expected.k &&
                        *row.params.d == spec.expected.d && row.compared_c == spec.paper_c && closed_form_agrees;
        }
        if (is_torus(spec.family.id) && !row.error) {
            bool color = spec.family.id == FamilyId::toric_color_hex || spec.family.id == FamilyId::toric_color_optimal;
            auto &slot = color ? k_color : k_surface;
            if (slot && *slot != row.params.k) {
                torus_k_consistent = false;
            }
            slot = row.params.k;
        }
        table.rows.push_back(std::move(row));
    }
    if (k_color && k_surface) {
        table.k_doubling = {*k_color, *k_surface, torus_k_consistent && *k_color == 2 * *k_surface};
    }
    return table;
}

}  // namespace topostab
