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

#include "topostab/lattice.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>

#include "instances.h"
#include "topostab/errors.h"
#include "topostab/families.h"

using namespace topostab;
using topostab::testing::nine_instances;

namespace {

Lattice steane_lattice() {
    return Lattice(LatticeKind::color, 7,
                   {{PlaquetteColor::red, {0, 1, 2, 3}},
                    {PlaquetteColor::green, {1, 2, 4, 5}},
                    {PlaquetteColor::blue, {2, 3, 5, 6}}});
}

size_t count(const std::string &text, const std::string &needle) {
    size_t hits = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        hits++;
    }
    return hits;
}

std::filesystem::path scratch(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / "topostab_lattice_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Lattice, StructuralChecks) {
    EXPECT_THROW(Lattice(LatticeKind::surface, 3, {{PlaquetteColor::red, {0, 1}}}), FormatError);
    EXPECT_THROW(Lattice(LatticeKind::color, 3, {{PlaquetteColor::dark, {0, 1}}}), FormatError);
    EXPECT_THROW(Lattice(LatticeKind::surface, 3, {{PlaquetteColor::dark, {}}}), FormatError);
    EXPECT_THROW(Lattice(LatticeKind::surface, 3, {{PlaquetteColor::dark, {0, 3}}}), FormatError);
    EXPECT_THROW(Lattice(LatticeKind::surface, 3, {{PlaquetteColor::dark, {1, 1}}}), FormatError);
    EXPECT_NO_THROW(Lattice(LatticeKind::surface, 0, {}));
}

TEST(Validate, ToricSurfacePasses) {
    auto report = validate(build({FamilyId::toric_surface_standard, 4}));
    EXPECT_TRUE(report.passed());
    EXPECT_TRUE(report.overlap_violations.empty());
    EXPECT_TRUE(report.boundary_qubits.empty());
    for (const auto &m : report.memberships) {
        EXPECT_EQ(m[static_cast<size_t>(PlaquetteColor::dark)], 2u);
        EXPECT_EQ(m[static_cast<size_t>(PlaquetteColor::light)], 2u);
    }
}

TEST(Validate, SteaneBoundary) {
    auto report = validate(steane_lattice());
    EXPECT_TRUE(report.overlap_parity_ok);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.boundary_qubits, (std::vector<size_t>{0, 1, 3, 4, 5, 6}));
    EXPECT_TRUE(report.excess_qubits.empty());
}

TEST(Validate, OddOverlapReported) {
    Lattice lat(LatticeKind::surface, 3, {{PlaquetteColor::dark, {0, 1}}, {PlaquetteColor::light, {1, 2}}});
    auto report = validate(lat);
    EXPECT_FALSE(report.overlap_parity_ok);
    ASSERT_EQ(report.overlap_violations.size(), 1u);
    EXPECT_EQ(report.overlap_violations[0].first, 0u);
    EXPECT_EQ(report.overlap_violations[0].second, 1u);
    EXPECT_EQ(report.overlap_violations[0].shared, 1u);
    EXPECT_FALSE(report.passed());
    EXPECT_NE(report.summary().find("odd overlap"), std::string::npos);
}

TEST(Validate, SameTypeSurfaceOverlapIsFine) {
    Lattice lat(LatticeKind::surface, 3, {{PlaquetteColor::dark, {0, 1}}, {PlaquetteColor::dark, {1, 2}}});
    EXPECT_TRUE(validate(lat).overlap_parity_ok);
}

TEST(Validate, OddColorPlaquetteFails) {
    // A color plaquette carries X and Z on the same support, so its size must be even.
    Lattice lat(LatticeKind::color, 3, {{PlaquetteColor::red, {0, 1, 2}}});
    EXPECT_FALSE(validate(lat).overlap_parity_ok);
}

TEST(Validate, ExcessMembershipFails) {
    Lattice lat(LatticeKind::color, 4,
                {{PlaquetteColor::red, {0, 1}}, {PlaquetteColor::red, {0, 1, 2, 3}}});
    auto report = validate(lat);
    EXPECT_FALSE(report.membership_ok);
    EXPECT_EQ(report.excess_qubits, (std::vector<size_t>{0, 1}));
}

TEST(Validate, TotalOnRandomLattices) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng() % 12;
        auto kind = rng() % 2 ? LatticeKind::surface : LatticeKind::color;
        std::vector<Plaquette> plaqs;
        size_t count = rng() % 8;
        for (size_t p = 0; p < count; p++) {
            Plaquette plaq;
            plaq.color = kind == LatticeKind::surface ? (rng() % 2 ? PlaquetteColor::dark : PlaquetteColor::light)
                                                      : static_cast<PlaquetteColor>(2 + rng() % 3);
            for (size_t q = 0; q < n; q++) {
                if (rng() % 3 == 0) {
                    plaq.qubits.push_back(q);
                }
            }
            if (plaq.qubits.empty()) {
                plaq.qubits.push_back(rng() % n);
            }
            plaqs.push_back(plaq);
        }
        Lattice lat(kind, n, plaqs);
        EXPECT_NO_THROW({
            auto report = validate(lat);
            EXPECT_EQ(report.memberships.size(), n);
        });
    }
}

TEST(Validate, BuiltInInstances) {
    for (const auto &inst : nine_instances()) {
        auto report = validate(build(inst.spec));
        EXPECT_TRUE(report.passed()) << inst.name() << ": " << report.summary();
        EXPECT_EQ(report.boundary_qubits.empty(), inst.torus()) << inst.name();
    }
}

TEST(LatticeFile, RoundTripAllInstances) {
    for (const auto &inst : nine_instances()) {
        auto lat = build(inst.spec);
        EXPECT_EQ(from_json(to_json(lat)), lat) << inst.name();
        auto path = scratch(inst.name() + ".json");
        save(lat, path);
        EXPECT_EQ(load(path), lat) << inst.name();
    }
}

TEST(LatticeFile, UnknownMetaKeysPreserved) {
    auto lat = from_json(R"({"format": "topostab-lattice/1", "kind": "surface", "n": 2,
        "plaquettes": [{"color": "dark", "qubits": [0, 1]}], "meta": {"anything": "kept", "genus": "0"}})");
    EXPECT_EQ(lat.meta_value("anything"), "kept");
    EXPECT_EQ(from_json(to_json(lat)), lat);
}

TEST(LatticeFile, Rejections) {
    auto doc = [](const std::string &body) {
        return R"({"format": "topostab-lattice/1", )" + body + "}";
    };
    EXPECT_THROW(from_json(doc(R"("kind": "surface", "n": 2, "plaquettes": [{"color": "dark", "qubits": [0, 2]}])")),
                 FormatError);
    EXPECT_THROW(from_json(doc(R"("kind": "surface", "n": 2, "plaquettes": [{"color": "red", "qubits": [0, 1]}])")),
                 FormatError);
    EXPECT_THROW(from_json(doc(R"("kind": "surface", "n": 2, "plaquettes": [], "extra": 1)")), FormatError);
    EXPECT_THROW(from_json(doc(R"("kind": "surface", "plaquettes": [])")), FormatError);
    EXPECT_THROW(from_json(doc(R"("kind": "torus", "n": 1, "plaquettes": [])")), FormatError);
    EXPECT_THROW(from_json(doc(R"("kind": "color", "n": 2, "plaquettes": [{"color": "red"}])")), FormatError);
    EXPECT_THROW(from_json(doc(R"("kind": "color", "n": 2, "plaquettes": [], "meta": {"g": 1})")), FormatError);
    EXPECT_THROW(from_json(doc(R"("kind": "color", "n": -1, "plaquettes": [])")), FormatError);
    EXPECT_THROW(from_json(R"({"format": "other/1", "kind": "color", "n": 1, "plaquettes": []})"), FormatError);
    EXPECT_THROW(from_json("{not json"), FormatError);
    EXPECT_THROW(from_json("[]"), FormatError);
}

TEST(LatticeFile, IoErrors) {
    EXPECT_THROW(load(scratch("does-not-exist.json")), IoError);
    EXPECT_THROW(save(steane_lattice(), scratch("no-such-dir") / "x.json"), IoError);
}

TEST(RenderSvg, SteaneWithCoords) {
    std::vector<Point2> coords = {{0, 0}, {2, 0}, {1, 1}, {0, 1}, {3, 0}, {1, 2}, {0, 3}};
    auto svg = render_svg(steane_lattice(), std::span<const Point2>(coords));
    EXPECT_EQ(count(svg, "<circle class=\"qubit\""), 7u);
    EXPECT_EQ(count(svg, "<polygon class=\"plaquette"), 3u);
    EXPECT_EQ(count(svg, "plaquette red"), 1u);
    EXPECT_EQ(svg, render_svg(steane_lattice(), std::span<const Point2>(coords)));
    std::vector<Point2> short_coords(3);
    EXPECT_THROW(render_svg(steane_lattice(), std::span<const Point2>(short_coords)), std::invalid_argument);
}

TEST(RenderSvg, ToricSurface) {
    auto lat = build({FamilyId::toric_surface_standard, 4});
    auto svg = render_svg(lat);
    EXPECT_EQ(count(svg, "<circle class=\"qubit\""), 32u);
    // One polygon per plaquette: 16 vertex stars and 16 faces.
    EXPECT_EQ(count(svg, "plaquette dark"), 16u);
    EXPECT_EQ(count(svg, "plaquette light"), 16u);
    auto layout = layout_from_meta(lat);
    ASSERT_TRUE(layout.has_value());
    EXPECT_EQ(layout->size(), 32u);
    auto placed = render_svg(lat, std::span<const Point2>(*layout));
    EXPECT_EQ(count(placed, "<polygon"), 32u);
}

TEST(RenderSvg, EmptyLattice) {
    auto svg = render_svg(Lattice(LatticeKind::surface, 0, {}));
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(count(svg, "<circle"), 0u);
}

TEST(RenderSvg, ForceLayoutIsDeterministic) {
    auto lat = steane_lattice();
    auto a = force_layout(lat);
    auto b = force_layout(lat);
    ASSERT_EQ(a.size(), 7u);
    for (size_t i = 0; i < a.size(); i++) {
        EXPECT_EQ(a[i].x, b[i].x);
        EXPECT_EQ(a[i].y, b[i].y);
    }
    EXPECT_EQ(render_svg(lat), render_svg(lat));
}

TEST(Layout, MetaRoundTrip) {
    std::vector<Point2> coords = {{0, 0}, {1.5, -2.25}};
    std::map<std::string, std::string> meta = {{"layout", layout_to_meta(coords)}};
    Lattice lat(LatticeKind::surface, 2, {}, meta);
    auto back = layout_from_meta(lat);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ((*back)[1].x, 1.5);
    EXPECT_EQ((*back)[1].y, -2.25);
    EXPECT_FALSE(layout_from_meta(Lattice(LatticeKind::surface, 2, {})).has_value());
}
