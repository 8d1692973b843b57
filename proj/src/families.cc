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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "topostab/stabilizer_code.h"

namespace topostab {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t m) {
    return (a - floor_mod(a, m)) / m;
}

std::string period_meta(Point2 u, Point2 v) {
    std::ostringstream out;
    out << u.x << "," << u.y << ";" << v.x << "," << v.y;
    return out.str();
}

std::map<std::string, std::string> base_meta(const FamilySpec &spec, std::span<const Point2> layout) {
    return {
        {"family", std::string(to_string(spec.id))},
        {"param", std::to_string(spec.param)},
        {"genus", is_torus(spec.id) ? "1" : "0"},
        {"layout", layout_to_meta(layout)},
    };
}

Lattice build_toric_standard(const FamilySpec &spec) {
    auto size = static_cast<size_t>(spec.param);
    size_t n = 2 * size * size;
    auto h = [size](size_t r, size_t c) { return (r % size) * size + c % size; };
    auto v = [size](size_t r, size_t c) { return size * size + (r % size) * size + c % size; };

    std::vector<Point2> layout(n);
    for (size_t r = 0; r < size; r++) {
        for (size_t c = 0; c < size; c++) {
            layout[h(r, c)] = {c + 0.5, static_cast<double>(r)};
            layout[v(r, c)] = {static_cast<double>(c), r + 0.5};
        }
    }
    std::vector<Plaquette> plaquettes;
    for (size_t r = 0; r < size; r++) {
        for (size_t c = 0; c < size; c++) {
            // Vertex star.
            plaquettes.push_back(
                {PlaquetteColor::dark, {h(r, c), v(r, c), h(r, c + size - 1), v(r + size - 1, c)}});
        }
    }
    for (size_t r = 0; r < size; r++) {
        for (size_t c = 0; c < size; c++) {
            // Face with lower-left corner (r, c).
            plaquettes.push_back({PlaquetteColor::light, {h(r, c), v(r, c + 1), h(r + 1, c), v(r, c)}});
        }
    }
    auto meta = base_meta(spec, layout);
    auto side = static_cast<double>(size);
    meta["period"] = period_meta({side, 0}, {0, side});
    return Lattice(LatticeKind::surface, n, std::move(plaquettes), std::move(meta));
}

Lattice build_toric_rotated(const FamilySpec &spec) {
    auto d = static_cast<size_t>(spec.param);
    auto q = [d](size_t i, size_t j) { return (i % d) * d + j % d; };
    std::vector<Point2> layout(d * d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            layout[q(i, j)] = {static_cast<double>(j), static_cast<double>(i)};
        }
    }
    std::vector<Plaquette> plaquettes;
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            auto color = (i + j) % 2 == 0 ? PlaquetteColor::dark : PlaquetteColor::light;
            plaquettes.push_back({color, {q(i, j), q(i, j + 1), q(i + 1, j + 1), q(i + 1, j)}});
        }
    }
    auto meta = base_meta(spec, layout);
    auto side = static_cast<double>(d);
    meta["period"] = period_meta({side, 0}, {0, side});
    return Lattice(LatticeKind::surface, d * d, std::move(plaquettes), std::move(meta));
}

Lattice build_planar_standard(const FamilySpec &spec) {
    auto d = static_cast<std::int64_t>(spec.param);
    std::int64_t side = 2 * d - 1;
    // Data qubits sit at even i + j of a side x side grid; checks at odd.
    std::vector<std::int64_t> index(side * side, -1);
    std::vector<Point2> layout;
    for (std::int64_t i = 0; i < side; i++) {
        for (std::int64_t j = 0; j < side; j++) {
            if ((i + j) % 2 == 0) {
                index[i * side + j] = static_cast<std::int64_t>(layout.size());
                layout.push_back({static_cast<double>(j), static_cast<double>(-i)});
            }
        }
    }
    std::vector<Plaquette> plaquettes;
    for (std::int64_t i = 0; i < side; i++) {
        for (std::int64_t j = 0; j < side; j++) {
            if ((i + j) % 2 == 0) {
                continue;
            }
            Plaquette plaq{i % 2 == 1 ? PlaquetteColor::dark : PlaquetteColor::light, {}};
            for (auto [di, dj] : {std::pair{-1, 0}, {0, 1}, {1, 0}, {0, -1}}) {
                std::int64_t ni = i + di;
                std::int64_t nj = j + dj;
                if (ni >= 0 && ni < side && nj >= 0 && nj < side) {
                    plaq.qubits.push_back(static_cast<size_t>(index[ni * side + nj]));
                }
            }
            plaquettes.push_back(std::move(plaq));
        }
    }
    size_t n = layout.size();
    auto meta = base_meta(spec, layout);
    return Lattice(LatticeKind::surface, n, std::move(plaquettes), std::move(meta));
}

Lattice build_planar_rotated(const FamilySpec &spec) {
    auto d = static_cast<std::int64_t>(spec.param);
    std::vector<Point2> layout(d * d);
    for (std::int64_t i = 0; i < d; i++) {
        for (std::int64_t j = 0; j < d; j++) {
            layout[i * d + j] = {static_cast<double>(j), static_cast<double>(-i)};
        }
    }
    std::vector<Plaquette> plaquettes;
    for (std::int64_t i = -1; i < d; i++) {
        for (std::int64_t j = -1; j < d; j++) {
            bool dark = floor_mod(i + j, 2) == 0;
            bool row_edge = i == -1 || i == d - 1;
            bool col_edge = j == -1 || j == d - 1;
            if (row_edge && col_edge) {
                continue;
            }
            // Top and bottom borders keep weight-2 X checks, left and right weight-2 Z checks.
            if ((row_edge && !dark) || (col_edge && dark)) {
                continue;
            }
            Plaquette plaq{dark ? PlaquetteColor::dark : PlaquetteColor::light, {}};
            for (auto [di, dj] : {std::pair{0, 0}, {0, 1}, {1, 1}, {1, 0}}) {
                std::int64_t ni = i + di;
                std::int64_t nj = j + dj;
                if (ni >= 0 && ni < d && nj >= 0 && nj < d) {
                    plaq.qubits.push_back(static_cast<size_t>(ni * d + nj));
                }
            }
            plaquettes.push_back(std::move(plaq));
        }
    }
    auto meta = base_meta(spec, layout);
    return Lattice(LatticeKind::surface, static_cast<size_t>(d * d), std::move(plaquettes), std::move(meta));
}

Point2 triangular_point(double a, double b) {
    return {a + b / 2, b * kSqrt3 / 2};
}

PlaquetteColor hexagon_color(std::int64_t c) {
    static constexpr PlaquetteColor colors[3] = {PlaquetteColor::red, PlaquetteColor::green, PlaquetteColor::blue};
    return colors[floor_mod(c, 3)];
}

Lattice build_triangular(const FamilySpec &spec) {
    std::int64_t d = spec.param;
    if (d == 3) {
        // The [[7,1,3]] incidence, pinned explicitly.
        std::vector<Point2> layout = {
            triangular_point(0, 0), triangular_point(2, 0), triangular_point(1, 1), triangular_point(0, 1),
            triangular_point(3, 0), triangular_point(1, 2), triangular_point(0, 3),
        };
        std::vector<Plaquette> plaquettes = {
            {PlaquetteColor::red, {0, 1, 2, 3}},
            {PlaquetteColor::green, {1, 2, 4, 5}},
            {PlaquetteColor::blue, {2, 3, 5, 6}},
        };
        return Lattice(LatticeKind::color, 7, std::move(plaquettes), base_meta(spec, layout));
    }
    return triangular_patch(d, base_meta(spec, {}));
}

}  // namespace

Lattice triangular_patch(std::int64_t d, std::map<std::string, std::string> meta) {
    // Points (a, b) of the triangular lattice with a, b >= 0 and a + b <= m.
    // Points with (a - b) = 1 mod 3 are hexagon centers; the rest are qubits.
    std::int64_t m = 3 * (d - 1) / 2;
    auto inside = [m](std::int64_t a, std::int64_t b) { return a >= 0 && b >= 0 && a + b <= m; };
    auto is_center = [](std::int64_t a, std::int64_t b) { return floor_mod(a - b, 3) == 1; };

    std::map<std::pair<std::int64_t, std::int64_t>, size_t> qubit_of;
    std::vector<Point2> layout;
    for (std::int64_t b = 0; b <= m; b++) {
        for (std::int64_t a = 0; a + b <= m; a++) {
            if (!is_center(a, b)) {
                qubit_of[{a, b}] = layout.size();
                layout.push_back(triangular_point(static_cast<double>(a), static_cast<double>(b)));
            }
        }
    }
    static constexpr std::int64_t kRing[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    std::vector<Plaquette> plaquettes;
    for (std::int64_t b = 0; b <= m; b++) {
        for (std::int64_t a = 0; a + b <= m; a++) {
            if (!is_center(a, b)) {
                continue;
            }
            Plaquette plaq{hexagon_color(b), {}};
            for (const auto &step : kRing) {
                std::int64_t na = a + step[0];
                std::int64_t nb = b + step[1];
                if (inside(na, nb)) {
                    plaq.qubits.push_back(qubit_of.at({na, nb}));
                }
            }
            plaquettes.push_back(std::move(plaq));
        }
    }
    size_t n = layout.size();
    meta["layout"] = layout_to_meta(layout);
    return Lattice(LatticeKind::color, n, std::move(plaquettes), std::move(meta));
}

std::string_view to_string(FamilyId id) {
    switch (id) {
        case FamilyId::toric_surface_standard:
            return "toric-surface-standard";
        case FamilyId::toric_surface_rotated:
            return "toric-surface-rotated";
        case FamilyId::toric_color_hex:
            return "toric-color-hex";
        case FamilyId::toric_color_optimal:
            return "toric-color-optimal";
        case FamilyId::planar_surface_standard:
            return "planar-surface-standard";
        case FamilyId::planar_surface_rotated:
            return "planar-surface-rotated";
        case FamilyId::triangular_color:
            return "triangular-color";
    }
    return "?";
}

FamilyId parse_family(std::string_view text) {
    for (auto id : kAllFamilies) {
        if (to_string(id) == text) {
            return id;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

bool is_torus(FamilyId id) {
    return id == FamilyId::toric_surface_standard || id == FamilyId::toric_surface_rotated ||
           id == FamilyId::toric_color_hex || id == FamilyId::toric_color_optimal;
}

Rational ClosedForm::n_at(std::int64_t p) const {
    return n2 * p * p + n1 * p + n0;
}

Rational ClosedForm::rate_limit() const {
    return n2 / Rational(d1 * d1);
}

ClosedForm closed_form(FamilyId id) {
    switch (id) {
        case FamilyId::toric_surface_standard:
            return {2, 0, 0, 1, 2};
        case FamilyId::toric_surface_rotated:
            return {1, 0, 0, 1, 2};
        case FamilyId::toric_color_hex:
            return {24, 0, 0, 4, 4};
        case FamilyId::toric_color_optimal:
            return {18, 0, 0, 4, 4};
        case FamilyId::planar_surface_standard:
            return {2, -2, 1, 1, 1};
        case FamilyId::planar_surface_rotated:
            return {1, 0, 0, 1, 1};
        case FamilyId::triangular_color:
            return {Rational(3, 4), 0, Rational(1, 4), 1, 1};
    }
    throw std::logic_error("unhandled family");
}

void check_param(const FamilySpec &spec) {
    std::int64_t p = spec.param;
    auto reject = [&](const std::string &why) {
        throw std::invalid_argument(std::string(to_string(spec.id)) + " parameter " + std::to_string(p) + ": " + why);
    };
    switch (spec.id) {
        case FamilyId::toric_surface_standard:
            if (p < 2) {
                reject("need L >= 2");
            }
            break;
        case FamilyId::toric_surface_rotated:
            if (p < 2 || p % 2) {
                reject("need even d >= 2 (checkerboard coloring is inconsistent on an odd torus)");
            }
            break;
        case FamilyId::toric_color_hex:
        case FamilyId::toric_color_optimal:
            if (p < 1) {
                reject("need l >= 1");
            }
            break;
        case FamilyId::planar_surface_standard:
            if (p < 2) {
                reject("need d >= 2");
            }
            break;
        case FamilyId::planar_surface_rotated:
            if (p < 3 || p % 2 == 0) {
                reject("need odd d >= 3");
            }
            break;
        case FamilyId::triangular_color:
            if (p < 3 || p % 2 == 0) {
                reject("need odd d >= 3");
            }
            break;
    }
}

Predicted predicted(const FamilySpec &spec) {
    check_param(spec);
    auto form = closed_form(spec.id);
    Rational n = form.n_at(spec.param);
    if (n.denominator() != 1) {
        throw std::logic_error("closed form gave a fractional qubit count");
    }
    return {static_cast<size_t>(n.numerator()), form.k, static_cast<size_t>(form.d1 * spec.param)};
}

Lattice build(const FamilySpec &spec) {
    auto expect = predicted(spec);
    auto make = [&]() -> Lattice {
        switch (spec.id) {
            case FamilyId::toric_surface_standard:
                return build_toric_standard(spec);
            case FamilyId::toric_surface_rotated:
                return build_toric_rotated(spec);
            case FamilyId::toric_color_hex:
            case FamilyId::toric_color_optimal: {
                Sublattice base =
                    spec.id == FamilyId::toric_color_hex ? hex_base_sublattice() : optimal_base_sublattice();
                Sublattice scaled{base.alpha * spec.param, base.beta * spec.param, base.gamma * spec.param};
                Lattice torus = honeycomb_torus(scaled);
                auto meta = torus.meta();
                meta["family"] = std::string(to_string(spec.id));
                meta["param"] = std::to_string(spec.param);
                meta["genus"] = "1";
                return Lattice(torus.kind(), torus.num_qubits(),
                               std::vector<Plaquette>(torus.plaquettes().begin(), torus.plaquettes().end()),
                               std::move(meta));
            }
            case FamilyId::planar_surface_standard:
                return build_planar_standard(spec);
            case FamilyId::planar_surface_rotated:
                return build_planar_rotated(spec);
            case FamilyId::triangular_color:
                return build_triangular(spec);
        }
        throw std::logic_error("unhandled family");
    };
    Lattice lat = make();
    if (lat.num_qubits() != expect.n) {
        throw std::logic_error(std::string(to_string(spec.id)) + " generated n=" + std::to_string(lat.num_qubits()) +
                               ", closed form says " + std::to_string(expect.n));
    }
    return lat;
}

Sublattice hermite_normal_form(std::array<std::int64_t, 2> t1, std::array<std::int64_t, 2> t2) {
    while (t2[0] != 0) {
        std::int64_t q = floor_div(t1[0], t2[0]);
        t1[0] -= q * t2[0];
        t1[1] -= q * t2[1];
        std::swap(t1, t2);
    }
    if (t1[0] < 0) {
        t1 = {-t1[0], -t1[1]};
    }
    if (t2[1] < 0) {
        t2[1] = -t2[1];
    }
    if (t1[0] == 0 || t2[1] == 0) {
        throw std::invalid_argument("translation vectors are linearly dependent");
    }
    return {t1[0], floor_mod(t1[1], t2[1]), t2[1]};
}

bool preserves_coloring(const Sublattice &s) {
    return floor_mod(s.alpha - s.beta, 3) == 0 && floor_mod(s.gamma, 3) == 0;
}

std::vector<Sublattice> color_preserving_sublattices(std::int64_t index) {
    std::vector<Sublattice> result;
    for (std::int64_t alpha = 1; alpha <= index; alpha++) {
        if (index % alpha) {
            continue;
        }
        std::int64_t gamma = index / alpha;
        for (std::int64_t beta = 0; beta < gamma; beta++) {
            Sublattice s{alpha, beta, gamma};
            if (preserves_coloring(s)) {
                result.push_back(s);
            }
        }
    }
    return result;
}

Lattice honeycomb_torus(const Sublattice &s) {
    if (!preserves_coloring(s)) {
        throw std::invalid_argument("sublattice does not preserve the hexagon 3-coloring");
    }
    std::int64_t cells = s.index();
    // Canonical coset representative: 0 <= a < alpha, 0 <= b < gamma.
    auto cell = [&](std::int64_t a, std::int64_t b) {
        std::int64_t k = floor_div(a, s.alpha);
        a -= k * s.alpha;
        b = floor_mod(b - k * s.beta, s.gamma);
        return static_cast<size_t>(a * s.gamma + b);
    };
    // Qubits are triangles of hexagon centers: up(a,b) = {p, p+e1, p+e2}
    // and down(a,b) = {p+e1, p+e2, p+e1+e2}.
    auto up = [&](std::int64_t a, std::int64_t b) { return 2 * cell(a, b); };
    auto down = [&](std::int64_t a, std::int64_t b) { return 2 * cell(a, b) + 1; };

    size_t n = static_cast<size_t>(2 * cells);
    std::vector<Point2> layout(n);
    std::vector<Plaquette> plaquettes;
    for (std::int64_t a = 0; a < s.alpha; a++) {
        for (std::int64_t b = 0; b < s.gamma; b++) {
            Point2 p = triangular_point(static_cast<double>(a), static_cast<double>(b));
            layout[up(a, b)] = {p.x + 0.5, p.y + kSqrt3 / 6};
            layout[down(a, b)] = {p.x + 1.0, p.y + kSqrt3 / 3};
            plaquettes.push_back({hexagon_color(a - b),
                                  {up(a, b), down(a, b - 1), up(a, b - 1), down(a - 1, b - 1), up(a - 1, b),
                                   down(a - 1, b)}});
        }
    }
    // A hexagon that wraps onto itself repeats a qubit.
    for (auto &plaq : plaquettes) {
        std::sort(plaq.qubits.begin(), plaq.qubits.end());
        if (std::adjacent_find(plaq.qubits.begin(), plaq.qubits.end()) != plaq.qubits.end()) {
            throw std::invalid_argument("sublattice too small: a hexagon wraps onto itself");
        }
    }
    std::map<std::string, std::string> meta = {
        {"genus", "1"},
        {"sublattice", std::to_string(s.alpha) + "," + std::to_string(s.beta) + ";0," + std::to_string(s.gamma)},
        {"layout", layout_to_meta(layout)},
    };
    Point2 u = triangular_point(static_cast<double>(s.alpha), static_cast<double>(s.beta));
    Point2 v = triangular_point(0, static_cast<double>(s.gamma));
    meta["period"] = period_meta(u, v);
    return Lattice(LatticeKind::color, n, std::move(plaquettes), std::move(meta));
}

SublatticeSearch search_honeycomb_base(std::int64_t index, size_t target_d, size_t workers) {
    SublatticeSearch search;
    for (const auto &s : color_preserving_sublattices(index)) {
        SublatticeCandidate candidate{s, false, 0, std::nullopt};
        try {
            auto code = StabilizerCode::from_lattice(honeycomb_torus(s));
            candidate.valid = true;
            candidate.k = code.k();
            candidate.d = distance(code, target_d, workers).d;
        } catch (const std::invalid_argument &) {
            candidate.valid = false;
        }
        if (!search.chosen && candidate.valid && candidate.d == target_d) {
            search.chosen = s;
        }
        search.candidates.push_back(candidate);
    }
    return search;
}

Sublattice hex_base_sublattice() {
    return {1, 4, 12};
}

Sublattice optimal_base_sublattice() {
    return {3, 0, 3};
}

}  // namespace topostab
