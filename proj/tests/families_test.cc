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

#include "topostab/families.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "instances.h"
#include "topostab/distance.h"
#include "topostab/stabilizer_code.h"

using namespace topostab;
using topostab::testing::nine_instances;

namespace {

std::vector<FamilySpec> small_specs() {
    std::vector<FamilySpec> specs;
    for (std::int64_t p = 2; p <= 6; p++) {
        specs.push_back({FamilyId::toric_surface_standard, p});
    }
    for (std::int64_t p : {2, 4, 6, 8}) {
        specs.push_back({FamilyId::toric_surface_rotated, p});
    }
    for (std::int64_t p : {1, 2}) {
        specs.push_back({FamilyId::toric_color_hex, p});
        specs.push_back({FamilyId::toric_color_optimal, p});
    }
    specs.push_back({FamilyId::toric_color_optimal, 3});
    for (std::int64_t p = 2; p <= 7; p++) {
        specs.push_back({FamilyId::planar_surface_standard, p});
    }
    for (std::int64_t p : {3, 5, 7, 9}) {
        specs.push_back({FamilyId::planar_surface_rotated, p});
    }
    for (std::int64_t p : {3, 5, 7, 9, 11}) {
        specs.push_back({FamilyId::triangular_color, p});
    }
    return specs;
}

std::string label(const FamilySpec &spec) {
    return std::string(to_string(spec.id)) + " " + std::to_string(spec.param);
}

}  // namespace

TEST(Families, IdsRoundTrip) {
    for (auto id : kAllFamilies) {
        EXPECT_EQ(parse_family(to_string(id)), id);
    }
    EXPECT_EQ(to_string(FamilyId::toric_color_hex), "toric-color-hex");
    EXPECT_THROW(parse_family("toric-color-square"), std::invalid_argument);
}

TEST(Families, InstanceSizes) {
    EXPECT_EQ(build({FamilyId::toric_surface_standard, 4}).num_qubits(), 32u);
    EXPECT_EQ(build({FamilyId::toric_surface_rotated, 4}).num_qubits(), 16u);
    EXPECT_EQ(build({FamilyId::toric_color_hex, 1}).num_qubits(), 24u);
    EXPECT_EQ(build({FamilyId::toric_color_optimal, 1}).num_qubits(), 18u);
    EXPECT_EQ(build({FamilyId::planar_surface_standard, 5}).num_qubits(), 41u);
    EXPECT_EQ(build({FamilyId::planar_surface_rotated, 5}).num_qubits(), 25u);
    EXPECT_EQ(build({FamilyId::triangular_color, 3}).num_qubits(), 7u);
    EXPECT_EQ(build({FamilyId::triangular_color, 5}).num_qubits(), 19u);
    EXPECT_EQ(build({FamilyId::triangular_color, 7}).num_qubits(), 37u);
    auto hex = build({FamilyId::toric_color_hex, 1});
    EXPECT_EQ(hex.plaquettes().size(), 12u);
    for (const auto &p : hex.plaquettes()) {
        EXPECT_EQ(p.qubits.size(), 6u);
    }
}

TEST(Families, ParameterRanges) {
    EXPECT_THROW(build({FamilyId::toric_surface_rotated, 3}), std::invalid_argument);
    EXPECT_THROW(build({FamilyId::toric_surface_rotated, 0}), std::invalid_argument);
    EXPECT_THROW(build({FamilyId::triangular_color, 4}), std::invalid_argument);
    EXPECT_THROW(build({FamilyId::triangular_color, 1}), std::invalid_argument);
    EXPECT_THROW(build({FamilyId::planar_surface_rotated, 4}), std::invalid_argument);
    EXPECT_THROW(build({FamilyId::planar_surface_standard, 1}), std::invalid_argument);
    EXPECT_THROW(build({FamilyId::toric_surface_standard, 1}), std::invalid_argument);
    EXPECT_THROW(build({FamilyId::toric_color_hex, 0}), std::invalid_argument);
    EXPECT_THROW(build({FamilyId::toric_color_optimal, -1}), std::invalid_argument);
}

TEST(Families, ClosedFormsAndValidation) {
    for (const auto &spec : small_specs()) {
        auto lat = build(spec);
        auto expect = predicted(spec);
        EXPECT_EQ(lat.num_qubits(), expect.n) << label(spec);
        auto report = validate(lat);
        EXPECT_TRUE(report.passed()) << label(spec) << ": " << report.summary();
        EXPECT_EQ(report.boundary_qubits.empty(), is_torus(spec.id)) << label(spec);
        EXPECT_EQ(lat.meta_value("family"), std::string(to_string(spec.id)));
        EXPECT_EQ(lat.meta_value("param"), std::to_string(spec.param));
    }
}

TEST(Families, ClosedFormValues) {
    auto n = [](FamilyId id, std::int64_t p) { return predicted({id, p}).n; };
    EXPECT_EQ(n(FamilyId::toric_surface_standard, 5), 50u);
    EXPECT_EQ(n(FamilyId::toric_surface_rotated, 6), 36u);
    EXPECT_EQ(n(FamilyId::toric_color_hex, 2), 96u);
    EXPECT_EQ(n(FamilyId::toric_color_optimal, 2), 72u);
    EXPECT_EQ(n(FamilyId::planar_surface_standard, 3), 13u);
    EXPECT_EQ(n(FamilyId::planar_surface_rotated, 7), 49u);
    EXPECT_EQ(n(FamilyId::triangular_color, 9), 61u);
    EXPECT_EQ(predicted({FamilyId::toric_color_hex, 3}).d, 12u);
    EXPECT_EQ(closed_form(FamilyId::planar_surface_standard).rate_limit(), Rational(2));
    EXPECT_EQ(closed_form(FamilyId::triangular_color).rate_limit(), Rational(3, 4));
    EXPECT_EQ(closed_form(FamilyId::toric_color_optimal).rate_limit(), Rational(9, 8));
}

TEST(Families, TorusMembershipProfiles) {
    for (const auto &spec : small_specs()) {
        if (!is_torus(spec.id)) {
            continue;
        }
        auto report = validate(build(spec));
        bool color = spec.id == FamilyId::toric_color_hex || spec.id == FamilyId::toric_color_optimal;
        for (const auto &m : report.memberships) {
            if (color) {
                EXPECT_EQ(m, (std::array<size_t, 5>{0, 0, 1, 1, 1})) << label(spec);
            } else {
                EXPECT_EQ(m, (std::array<size_t, 5>{2, 2, 0, 0, 0})) << label(spec);
            }
        }
    }
}

TEST(Families, KMatchesPrediction) {
    for (const auto &spec : small_specs()) {
        auto code = StabilizerCode::from_lattice(build(spec));
        EXPECT_EQ(code.k(), predicted(spec).k) << label(spec);
    }
}

TEST(Families, TorusKDoubling) {
    std::set<size_t> color_k, surface_k;
    for (const auto &spec : small_specs()) {
        if (!is_torus(spec.id)) {
            continue;
        }
        auto k = StabilizerCode::from_lattice(build(spec)).k();
        bool color = spec.id == FamilyId::toric_color_hex || spec.id == FamilyId::toric_color_optimal;
        (color ? color_k : surface_k).insert(k);
    }
    EXPECT_EQ(color_k, (std::set<size_t>{4}));
    EXPECT_EQ(surface_k, (std::set<size_t>{2}));
}

TEST(Families, SurfaceGeneratorsCommute) {
    for (const auto &spec : small_specs()) {
        auto lat = build(spec);
        if (lat.kind() != LatticeKind::surface) {
            continue;
        }
        for (const auto &a : lat.plaquettes()) {
            for (const auto &b : lat.plaquettes()) {
                if (a.color != PlaquetteColor::dark || b.color != PlaquetteColor::light) {
                    continue;
                }
                auto x = PauliOperator::x_type(BitVector::from_indices(lat.num_qubits(), a.qubits));
                auto z = PauliOperator::z_type(BitVector::from_indices(lat.num_qubits(), b.qubits));
                EXPECT_TRUE(commutes(x, z)) << label(spec);
            }
        }
    }
}

TEST(Triangular, FixedIncidence) {
    auto lat = build({FamilyId::triangular_color, 3});
    ASSERT_EQ(lat.plaquettes().size(), 3u);
    EXPECT_EQ(lat.plaquette(0).qubits, (std::vector<size_t>{0, 1, 2, 3}));
    EXPECT_EQ(lat.plaquette(1).qubits, (std::vector<size_t>{1, 2, 4, 5}));
    EXPECT_EQ(lat.plaquette(2).qubits, (std::vector<size_t>{2, 3, 5, 6}));
    std::set<PlaquetteColor> colors;
    for (const auto &p : lat.plaquettes()) {
        colors.insert(p.color);
    }
    EXPECT_EQ(colors.size(), 3u);
}

TEST(Triangular, RegionConstructionMatchesFixedIncidence) {
    auto fixed = build({FamilyId::triangular_color, 3});
    auto grown = triangular_patch(3);
    ASSERT_EQ(grown.num_qubits(), 7u);
    ASSERT_EQ(grown.plaquettes().size(), 3u);
    auto supports = [](const Lattice &lat, const std::vector<size_t> &perm) {
        std::set<std::set<size_t>> out;
        for (const auto &p : lat.plaquettes()) {
            std::set<size_t> s;
            for (size_t q : p.qubits) {
                s.insert(perm[q]);
            }
            out.insert(s);
        }
        return out;
    };
    std::vector<size_t> identity(7);
    std::iota(identity.begin(), identity.end(), 0);
    auto target = supports(fixed, identity);
    std::vector<size_t> perm = identity;
    bool isomorphic = false;
    do {
        isomorphic = supports(grown, perm) == target;
    } while (!isomorphic && std::next_permutation(perm.begin(), perm.end()));
    EXPECT_TRUE(isomorphic);
}

TEST(Triangular, ThreeColoredBorders) {
    // Border plaquettes have 4 qubits, bulk plaquettes 6.
    for (std::int64_t d : {5, 7, 9}) {
        auto lat = build({FamilyId::triangular_color, d});
        std::map<size_t, size_t> sizes;
        std::set<PlaquetteColor> colors;
        for (const auto &p : lat.plaquettes()) {
            sizes[p.qubits.size()]++;
            colors.insert(p.color);
        }
        EXPECT_EQ(colors.size(), 3u);
        EXPECT_EQ(lat.plaquettes().size(), (lat.num_qubits() - 1) / 2) << d;
        for (const auto &[size, count] : sizes) {
            EXPECT_TRUE(size == 4 || size == 6) << d << " has a plaquette of size " << size;
        }
        EXPECT_EQ(sizes[4], static_cast<size_t>(3 * (d - 1) / 2)) << d;
    }
}

TEST(Honeycomb, HermiteNormalForm) {
    EXPECT_EQ(hermite_normal_form({3, 0}, {0, 3}), (Sublattice{3, 0, 3}));
    EXPECT_EQ(hermite_normal_form({0, 3}, {3, 0}), (Sublattice{3, 0, 3}));
    EXPECT_EQ(hermite_normal_form({3, 3}, {0, 3}), (Sublattice{3, 0, 3}));
    EXPECT_EQ(hermite_normal_form({1, 4}, {0, 12}), (Sublattice{1, 4, 12}));
    EXPECT_EQ(hermite_normal_form({1, 4}, {1, -8}), (Sublattice{1, 4, 12}));
    EXPECT_EQ(hermite_normal_form({-2, -2}, {0, 6}), (Sublattice{2, 2, 6}));
    EXPECT_THROW(hermite_normal_form({1, 2}, {2, 4}), std::invalid_argument);
}

TEST(Honeycomb, ColorPreservingSublattices) {
    EXPECT_TRUE(preserves_coloring({3, 0, 3}));
    EXPECT_FALSE(preserves_coloring({2, 0, 6}));
    EXPECT_FALSE(preserves_coloring({1, 1, 4}));
    EXPECT_EQ(color_preserving_sublattices(9),
              (std::vector<Sublattice>{{1, 1, 9}, {1, 4, 9}, {1, 7, 9}, {3, 0, 3}}));
    EXPECT_EQ(color_preserving_sublattices(12), (std::vector<Sublattice>{
                                                    {1, 1, 12}, {1, 4, 12}, {1, 7, 12}, {1, 10, 12},
                                                    {2, 2, 6}, {2, 5, 6}, {4, 1, 3}}));
    EXPECT_TRUE(color_preserving_sublattices(10).empty());
    EXPECT_THROW(honeycomb_torus({2, 0, 6}), std::invalid_argument);
}

TEST(Honeycomb, SearchFixesBaseVectors) {
    // Distances per candidate, frozen from distance_oracle sweeps.
    struct Row {
        Sublattice s;
        size_t d;
    };
    std::vector<Row> index12 = {{{1, 1, 12}, 2}, {{1, 4, 12}, 4}, {{1, 7, 12}, 4}, {{1, 10, 12}, 2},
                                {{2, 2, 6}, 4},  {{2, 5, 6}, 2},  {{4, 1, 3}, 4}};
    std::vector<Row> index9 = {{{1, 1, 9}, 2}, {{1, 4, 9}, 2}, {{1, 7, 9}, 2}, {{3, 0, 3}, 4}};
    for (const auto &[index, rows] : {std::pair{12, index12}, std::pair{9, index9}}) {
        auto search = search_honeycomb_base(index, 4, 1);
        ASSERT_EQ(search.candidates.size(), rows.size());
        for (size_t i = 0; i < rows.size(); i++) {
            const auto &c = search.candidates[i];
            EXPECT_EQ(c.sublattice, rows[i].s);
            EXPECT_TRUE(c.valid);
            EXPECT_EQ(c.k, 4u);
            EXPECT_EQ(c.d, rows[i].d);
            auto code = StabilizerCode::from_lattice(honeycomb_torus(c.sublattice));
            EXPECT_EQ(distance_oracle(code).d, rows[i].d);
        }
    }
    EXPECT_EQ(search_honeycomb_base(12, 4, 1).chosen, hex_base_sublattice());
    EXPECT_EQ(search_honeycomb_base(9, 4, 1).chosen, optimal_base_sublattice());
    EXPECT_EQ(hex_base_sublattice(), (Sublattice{1, 4, 12}));
    EXPECT_EQ(optimal_base_sublattice(), (Sublattice{3, 0, 3}));
}

TEST(Honeycomb, ScaledInstancesTileTheBase) {
    auto base = hex_base_sublattice();
    auto lat = build({FamilyId::toric_color_hex, 2});
    EXPECT_EQ(lat.num_qubits(), static_cast<size_t>(2 * base.index() * 4));
    EXPECT_EQ(lat.meta_value("sublattice"), "2,8;0,24");
}

TEST(Families, InstanceListIsNine) {
    EXPECT_EQ(nine_instances().size(), 9u);
}
