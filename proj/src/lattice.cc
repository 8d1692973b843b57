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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "topostab/errors.h"

namespace topostab {

namespace {

constexpr std::string_view kLatticeFormat = "topostab-lattice/1";

constexpr size_t color_index(PlaquetteColor c) {
    return static_cast<size_t>(c);
}

}  // namespace

std::string_view to_string(LatticeKind kind) {
    return kind == LatticeKind::surface ? "surface" : "color";
}

std::string_view to_string(PlaquetteColor color) {
    switch (color) {
        case PlaquetteColor::dark:
            return "dark";
        case PlaquetteColor::light:
            return "light";
        case PlaquetteColor::red:
            return "red";
        case PlaquetteColor::green:
            return "green";
        case PlaquetteColor::blue:
            return "blue";
    }
    return "?";
}

LatticeKind parse_kind(std::string_view text) {
    if (text == "surface") {
        return LatticeKind::surface;
    }
    if (text == "color") {
        return LatticeKind::color;
    }
    throw FormatError("unknown lattice kind '" + std::string(text) + "'");
}

PlaquetteColor parse_color(std::string_view text) {
    for (auto c : {PlaquetteColor::dark, PlaquetteColor::light, PlaquetteColor::red, PlaquetteColor::green,
                   PlaquetteColor::blue}) {
        if (to_string(c) == text) {
            return c;
        }
    }
    throw FormatError("unknown plaquette color '" + std::string(text) + "'");
}

bool color_allowed(LatticeKind kind, PlaquetteColor color) {
    bool two_colored = color == PlaquetteColor::dark || color == PlaquetteColor::light;
    return kind == LatticeKind::surface ? two_colored : !two_colored;
}

Lattice::Lattice(LatticeKind kind, size_t num_qubits, std::vector<Plaquette> plaquettes,
                 std::map<std::string, std::string> meta)
    : kind_(kind), num_qubits_(num_qubits), plaquettes_(std::move(plaquettes)), meta_(std::move(meta)) {
    for (size_t p = 0; p < plaquettes_.size(); p++) {
        const auto &plaq = plaquettes_[p];
        std::string where = "plaquette " + std::to_string(p);
        if (!color_allowed(kind_, plaq.color)) {
            throw FormatError(where + ": color '" + std::string(to_string(plaq.color)) +
                              "' is not allowed for kind '" + std::string(to_string(kind_)) + "'");
        }
        if (plaq.qubits.empty()) {
            throw FormatError(where + " is empty");
        }
        std::set<size_t> seen;
        for (size_t q : plaq.qubits) {
            if (q >= num_qubits_) {
                throw FormatError(where + ": qubit index " + std::to_string(q) + " out of range [0, " +
                                  std::to_string(num_qubits_) + ")");
            }
            if (!seen.insert(q).second) {
                throw FormatError(where + ": qubit " + std::to_string(q) + " repeated");
            }
        }
    }
}

std::optional<std::string> Lattice::meta_value(const std::string &key) const {
    auto it = meta_.find(key);
    if (it == meta_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string ValidationReport::summary() const {
    if (passed()) {
        return "ok (" + std::to_string(boundary_qubits.size()) + " boundary qubits)";
    }
    std::ostringstream out;
    if (!overlap_parity_ok) {
        out << overlap_violations.size() << " odd overlaps";
        const auto &v = overlap_violations.front();
        out << " (first: plaquettes " << v.first << "," << v.second << " share " << v.shared << ")";
    }
    if (!membership_ok) {
        if (!overlap_parity_ok) {
            out << "; ";
        }
        out << excess_qubits.size() << " qubits with excess memberships (first: qubit " << excess_qubits.front()
            << ")";
    }
    return out.str();
}

ValidationReport validate(const Lattice &lat) {
    ValidationReport report;
    size_t n = lat.num_qubits();
    auto plaqs = lat.plaquettes();

    std::vector<std::vector<size_t>> containing(n);
    for (size_t p = 0; p < plaqs.size(); p++) {
        for (size_t q : plaqs[p].qubits) {
            containing[q].push_back(p);
        }
    }

    std::map<std::pair<size_t, size_t>, size_t> shared;
    for (size_t q = 0; q < n; q++) {
        const auto &ps = containing[q];
        for (size_t i = 0; i < ps.size(); i++) {
            for (size_t j = i + 1; j < ps.size(); j++) {
                shared[{ps[i], ps[j]}]++;
            }
        }
    }
    bool surface = lat.kind() == LatticeKind::surface;
    for (const auto &[key, count] : shared) {
        if (count % 2 == 0) {
            continue;
        }
        if (surface && plaqs[key.first].color == plaqs[key.second].color) {
            continue;
        }
        report.overlap_violations.push_back({key.first, key.second, count});
    }
    if (!surface) {
        for (size_t p = 0; p < plaqs.size(); p++) {
            if (plaqs[p].qubits.size() % 2) {
                report.overlap_violations.push_back({p, p, plaqs[p].qubits.size()});
            }
        }
        std::sort(report.overlap_violations.begin(), report.overlap_violations.end(),
                  [](const auto &a, const auto &b) { return std::pair(a.first, a.second) < std::pair(b.first, b.second); });
    }
    report.overlap_parity_ok = report.overlap_violations.empty();

    std::array<size_t, 5> closed_profile{};
    if (surface) {
        closed_profile[color_index(PlaquetteColor::dark)] = 2;
        closed_profile[color_index(PlaquetteColor::light)] = 2;
    } else {
        closed_profile[color_index(PlaquetteColor::red)] = 1;
        closed_profile[color_index(PlaquetteColor::green)] = 1;
        closed_profile[color_index(PlaquetteColor::blue)] = 1;
    }
    report.memberships.assign(n, {});
    for (size_t q = 0; q < n; q++) {
        for (size_t p : containing[q]) {
            report.memberships[q][color_index(plaqs[p].color)]++;
        }
        bool deficit = false;
        bool excess = false;
        for (size_t c = 0; c < 5; c++) {
            deficit |= report.memberships[q][c] < closed_profile[c];
            excess |= report.memberships[q][c] > closed_profile[c];
        }
        if (excess) {
            report.excess_qubits.push_back(q);
        } else if (deficit) {
            report.boundary_qubits.push_back(q);
        }
    }
    report.membership_ok = report.excess_qubits.empty();
    return report;
}

std::string to_json(const Lattice &lat) {
    using nlohmann::json;
    std::ostringstream out;
    out << "{\n";
    out << "  \"format\": " << json(kLatticeFormat).dump() << ",\n";
    out << "  \"kind\": " << json(to_string(lat.kind())).dump() << ",\n";
    out << "  \"n\": " << lat.num_qubits() << ",\n";
    out << "  \"plaquettes\": [";
    auto plaqs = lat.plaquettes();
    for (size_t p = 0; p < plaqs.size(); p++) {
        out << (p ? ",\n" : "\n") << "    {\"color\": " << json(to_string(plaqs[p].color)).dump() << ", \"qubits\": [";
        for (size_t i = 0; i < plaqs[p].qubits.size(); i++) {
            out << (i ? ", " : "") << plaqs[p].qubits[i];
        }
        out << "]}";
    }
    out << (plaqs.empty() ? "],\n" : "\n  ],\n");
    out << "  \"meta\": " << json(lat.meta()).dump() << "\n";
    out << "}\n";
    return out.str();
}

Lattice from_json(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(std::string("malformed lattice file: ") + e.what());
    }
    if (!doc.is_object()) {
        throw FormatError("lattice file must contain an object");
    }
    static const std::set<std::string> known = {"format", "kind", "n", "plaquettes", "meta"};
    for (const auto &item : doc.items()) {
        if (!known.contains(item.key())) {
            throw FormatError("unknown top-level key '" + item.key() + "'");
        }
    }
    for (const char *required : {"format", "kind", "n", "plaquettes"}) {
        if (!doc.contains(required)) {
            throw FormatError(std::string("missing key '") + required + "'");
        }
    }
    if (!doc["format"].is_string() || doc["format"].get<std::string>() != kLatticeFormat) {
        throw FormatError("unsupported format tag, expected '" + std::string(kLatticeFormat) + "'");
    }
    if (!doc["kind"].is_string()) {
        throw FormatError("'kind' must be a string");
    }
    LatticeKind kind = parse_kind(doc["kind"].get<std::string>());
    if (!doc["n"].is_number_unsigned()) {
        throw FormatError("'n' must be a non-negative integer");
    }
    auto n = doc["n"].get<size_t>();
    if (!doc["plaquettes"].is_array()) {
        throw FormatError("'plaquettes' must be an array");
    }
    std::vector<Plaquette> plaquettes;
    for (const auto &entry : doc["plaquettes"]) {
        std::string where = "plaquette " + std::to_string(plaquettes.size());
        if (!entry.is_object() || !entry.contains("color") || !entry.contains("qubits") || entry.size() != 2) {
            throw FormatError(where + " must be an object with exactly 'color' and 'qubits'");
        }
        if (!entry["color"].is_string() || !entry["qubits"].is_array()) {
            throw FormatError(where + ": 'color' must be a string and 'qubits' an array");
        }
        Plaquette plaq{parse_color(entry["color"].get<std::string>()), {}};
        for (const auto &q : entry["qubits"]) {
            if (!q.is_number_integer()) {
                throw FormatError(where + ": qubit indices must be integers");
            }
            if (q.get<long long>() < 0) {
                throw FormatError(where + ": qubit index " + q.dump() + " out of range");
            }
            plaq.qubits.push_back(q.get<size_t>());
        }
        plaquettes.push_back(std::move(plaq));
    }
    std::map<std::string, std::string> meta;
    if (doc.contains("meta")) {
        if (!doc["meta"].is_object()) {
            throw FormatError("'meta' must be an object");
        }
        for (const auto &item : doc["meta"].items()) {
            if (!item.value().is_string()) {
                throw FormatError("meta value for '" + item.key() + "' must be a string");
            }
            meta[item.key()] = item.value().get<std::string>();
        }
    }
    return Lattice(kind, n, std::move(plaquettes), std::move(meta));
}

Lattice load(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

void save(const Lattice &lat, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << to_json(lat);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

std::optional<std::vector<Point2>> layout_from_meta(const Lattice &lat) {
    auto text = lat.meta_value("layout");
    if (!text) {
        return std::nullopt;
    }
    std::vector<Point2> coords;
    std::istringstream in(*text);
    std::string token;
    while (in >> token) {
        auto comma = token.find(',');
        if (comma == std::string::npos) {
            return std::nullopt;
        }
        try {
            coords.push_back({std::stod(token.substr(0, comma)), std::stod(token.substr(comma + 1))});
        } catch (const std::exception &) {
            return std::nullopt;
        }
    }
    if (coords.size() != lat.num_qubits()) {
        return std::nullopt;
    }
    return coords;
}

std::string layout_to_meta(std::span<const Point2> coords) {
    std::ostringstream out;
    out << std::setprecision(6);
    for (size_t i = 0; i < coords.size(); i++) {
        out << (i ? " " : "") << coords[i].x << "," << coords[i].y;
    }
    return out.str();
}

std::vector<Point2> force_layout(const Lattice &lat) {
    size_t n = lat.num_qubits();
    std::vector<Point2> pos(n);
    double radius = std::sqrt(static_cast<double>(n)) + 1.0;
    for (size_t i = 0; i < n; i++) {
        double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(std::max<size_t>(n, 1));
        pos[i] = {radius * std::cos(angle), radius * std::sin(angle)};
    }
    std::set<std::pair<size_t, size_t>> edges;
    for (const auto &plaq : lat.plaquettes()) {
        for (size_t i = 0; i < plaq.qubits.size(); i++) {
            for (size_t j = i + 1; j < plaq.qubits.size(); j++) {
                edges.insert(std::minmax(plaq.qubits[i], plaq.qubits[j]));
            }
        }
    }

    // Fruchterman-Reingold with unit ideal edge length and linear cooling.
    constexpr int kIterations = 400;
    std::vector<Point2> disp(n);
    for (int iter = 0; iter < kIterations; iter++) {
        double temperature = radius * (1.0 - static_cast<double>(iter) / kIterations) * 0.1;
        std::fill(disp.begin(), disp.end(), Point2{0, 0});
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i + 1; j < n; j++) {
                double dx = pos[i].x - pos[j].x;
                double dy = pos[i].y - pos[j].y;
                double dist2 = std::max(dx * dx + dy * dy, 1e-6);
                double f = 1.0 / dist2;
                disp[i].x += dx * f;
                disp[i].y += dy * f;
                disp[j].x -= dx * f;
                disp[j].y -= dy * f;
            }
        }
        for (const auto &[i, j] : edges) {
            double dx = pos[i].x - pos[j].x;
            double dy = pos[i].y - pos[j].y;
            double dist = std::sqrt(dx * dx + dy * dy);
            disp[i].x -= dx * dist;
            disp[i].y -= dy * dist;
            disp[j].x += dx * dist;
            disp[j].y += dy * dist;
        }
        for (size_t i = 0; i < n; i++) {
            double len = std::sqrt(disp[i].x * disp[i].x + disp[i].y * disp[i].y);
            if (len > 0) {
                double step = std::min(len, temperature) / len;
                pos[i].x += disp[i].x * step;
                pos[i].y += disp[i].y * step;
            }
        }
    }
    return pos;
}

namespace {

std::string_view fill_for(PlaquetteColor color) {
    switch (color) {
        case PlaquetteColor::dark:
            return "#6b6b6b";
        case PlaquetteColor::light:
            return "#e3e3e3";
        case PlaquetteColor::red:
            return "#e06666";
        case PlaquetteColor::green:
            return "#6aa84f";
        case PlaquetteColor::blue:
            return "#6fa8dc";
    }
    return "#000000";
}

struct Period {
    Point2 u;
    Point2 v;
};

std::optional<Period> period_from_meta(const Lattice &lat) {
    auto text = lat.meta_value("period");
    if (!text) {
        return std::nullopt;
    }
    double ux, uy, vx, vy;
    char c1, c2, c3;
    std::istringstream in(*text);
    if (!(in >> ux >> c1 >> uy >> c2 >> vx >> c3 >> vy) || c1 != ',' || c2 != ';' || c3 != ',') {
        return std::nullopt;
    }
    if (std::abs(ux * vy - uy * vx) < 1e-12) {
        return std::nullopt;
    }
    // Gauss-reduce the period basis.
    Period period{{ux, uy}, {vx, vy}};
    auto norm2 = [](Point2 a) { return a.x * a.x + a.y * a.y; };
    for (int iter = 0; iter < 64; iter++) {
        if (norm2(period.u) > norm2(period.v)) {
            std::swap(period.u, period.v);
        }
        double mu = std::round((period.u.x * period.v.x + period.u.y * period.v.y) / norm2(period.u));
        if (mu == 0) {
            break;
        }
        period.v = {period.v.x - mu * period.u.x, period.v.y - mu * period.u.y};
    }
    return period;
}

/// Shifts p by a period vector combination so it lands nearest anchor.
Point2 wrap_near(Point2 p, Point2 anchor, const Period &period) {
    double dx = p.x - anchor.x;
    double dy = p.y - anchor.y;
    double det = period.u.x * period.v.y - period.u.y * period.v.x;
    double s0 = std::round((dx * period.v.y - dy * period.v.x) / det);
    double t0 = std::round((period.u.x * dy - period.u.y * dx) / det);
    Point2 best = p;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int ds = -1; ds <= 1; ds++) {
        for (int dt = -1; dt <= 1; dt++) {
            double s = s0 + ds;
            double t = t0 + dt;
            Point2 q{p.x - s * period.u.x - t * period.v.x, p.y - s * period.u.y - t * period.v.y};
            double dist = (q.x - anchor.x) * (q.x - anchor.x) + (q.y - anchor.y) * (q.y - anchor.y);
            if (dist < best_dist - 1e-9) {
                best = q;
                best_dist = dist;
            }
        }
    }
    return best;
}

}  // namespace

std::string render_svg(const Lattice &lat, std::optional<std::span<const Point2>> coords) {
    std::vector<Point2> pos;
    if (coords) {
        if (coords->size() != lat.num_qubits()) {
            throw std::invalid_argument("need one coordinate per qubit");
        }
        pos.assign(coords->begin(), coords->end());
    } else {
        pos = force_layout(lat);
    }
    auto period = period_from_meta(lat);

    std::vector<std::vector<Point2>> polygons;
    for (const auto &plaq : lat.plaquettes()) {
        std::vector<Point2> corners;
        Point2 anchor = pos[plaq.qubits.front()];
        for (size_t q : plaq.qubits) {
            Point2 p = pos[q];
            if (period) {
                p = wrap_near(p, anchor, *period);
            }
            corners.push_back(p);
        }
        Point2 center{0, 0};
        for (const auto &c : corners) {
            center.x += c.x / static_cast<double>(corners.size());
            center.y += c.y / static_cast<double>(corners.size());
        }
        std::stable_sort(corners.begin(), corners.end(), [&](const Point2 &a, const Point2 &b) {
            return std::atan2(a.y - center.y, a.x - center.x) < std::atan2(b.y - center.y, b.x - center.x);
        });
        polygons.push_back(std::move(corners));
    }

    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool first = true;
    auto extend = [&](const Point2 &p) {
        if (first) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            first = false;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    };
    for (const auto &p : pos) {
        extend(p);
    }
    for (const auto &poly : polygons) {
        for (const auto &p : poly) {
            extend(p);
        }
    }
    constexpr double kScale = 40.0;
    constexpr double kMargin = 20.0;
    auto sx = [&](double x) { return kMargin + (x - min_x) * kScale; };
    // SVG y grows downward.
    auto sy = [&](double y) { return kMargin + (max_y - y) * kScale; };
    double width = 2 * kMargin + (max_x - min_x) * kScale;
    double height = 2 * kMargin + (max_y - min_y) * kScale;

    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    auto plaqs = lat.plaquettes();
    for (size_t p = 0; p < plaqs.size(); p++) {
        out << "  <polygon class=\"plaquette " << to_string(plaqs[p].color) << "\" fill=\"" << fill_for(plaqs[p].color)
            << "\" fill-opacity=\"0.75\" stroke=\"#222222\" stroke-width=\"1\" points=\"";
        for (size_t i = 0; i < polygons[p].size(); i++) {
            out << (i ? " " : "") << sx(polygons[p][i].x) << "," << sy(polygons[p][i].y);
        }
        out << "\"/>\n";
    }
    for (size_t q = 0; q < pos.size(); q++) {
        out << "  <circle class=\"qubit\" cx=\"" << sx(pos[q].x) << "\" cy=\"" << sy(pos[q].y)
            << "\" r=\"6\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.5\"><title>q" << q
            << "</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace topostab
