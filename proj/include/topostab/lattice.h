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

#ifndef TOPOSTAB_LATTICE_H
#define TOPOSTAB_LATTICE_H

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace topostab {

enum class LatticeKind { surface, color };
enum class PlaquetteColor { dark, light, red, green, blue };

std::string_view to_string(LatticeKind kind);
std::string_view to_string(PlaquetteColor color);
LatticeKind parse_kind(std::string_view text);
PlaquetteColor parse_color(std::string_view text);
bool color_allowed(LatticeKind kind, PlaquetteColor color);

struct Plaquette {
    PlaquetteColor color;
    std::vector<size_t> qubits;

    bool operator==(const Plaquette &) const = default;
};

/// A combinatorial 2-complex: qubits on sites and colored plaquettes given
/// as qubit sets. Only incidence is stored; geometry hints (layout, torus
/// period, genus) travel in `meta`.
///
/// Construction enforces the structural invariants (indices in range,
/// nonempty plaquettes without repeated qubits, colors matching the kind)
/// and throws FormatError otherwise.
class Lattice {
   public:
    Lattice(LatticeKind kind, size_t num_qubits, std::vector<Plaquette> plaquettes,
            std::map<std::string, std::string> meta = {});

    LatticeKind kind() const {
        return kind_;
    }
    size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Plaquette> plaquettes() const {
        return plaquettes_;
    }
    const Plaquette &plaquette(size_t id) const {
        return plaquettes_[id];
    }
    const std::map<std::string, std::string> &meta() const {
        return meta_;
    }
    std::optional<std::string> meta_value(const std::string &key) const;

    bool operator==(const Lattice &) const = default;

   private:
    LatticeKind kind_;
    size_t num_qubits_;
    std::vector<Plaquette> plaquettes_;
    std::map<std::string, std::string> meta_;
};

struct OverlapViolation {
    size_t first;
    size_t second;
    size_t shared;
};

struct ValidationReport {
    bool overlap_parity_ok = true;
    std::vector<OverlapViolation> overlap_violations;

    /// Memberships per qubit, indexed by PlaquetteColor.
    std::vector<std::array<size_t, 5>> memberships;
    /// Qubits with fewer memberships than a closed lattice requires.
    std::vector<size_t> boundary_qubits;
    /// Qubits with more memberships than a closed lattice allows.
    std::vector<size_t> excess_qubits;
    bool membership_ok = true;

    bool passed() const {
        return overlap_parity_ok && membership_ok;
    }
    /// One-line human summary of any failures.
    std::string summary() const;
};

/// Checks that the plaquette operators of `lat` commute and that every
/// qubit has a closed-lattice membership profile or a deficit of it.
///
/// Surface kind: every dark/light pair shares an even number of qubits and
/// closed qubits sit in 2 dark + 2 light plaquettes. Color kind: every pair
/// of plaquettes, a plaquette with itself included (its X and Z
/// generators), shares an even number of qubits and closed qubits sit in
/// one plaquette of each color. Never throws.
ValidationReport validate(const Lattice &lat);

/// Text interchange format "topostab-lattice/1".
std::string to_json(const Lattice &lat);
Lattice from_json(std::string_view text);
Lattice load(const std::filesystem::path &path);
void save(const Lattice &lat, const std::filesystem::path &path);

struct Point2 {
    double x;
    double y;
};

/// Per-qubit positions stored in meta["layout"], if present and well formed.
std::optional<std::vector<Point2>> layout_from_meta(const Lattice &lat);
std::string layout_to_meta(std::span<const Point2> coords);

/// SVG drawing: one filled polygon per plaquette and one circle per qubit.
/// Without coords a deterministic force layout is computed. When
/// meta["period"] = "ux,uy;vx,vy" gives the torus translations, each
/// polygon is unwrapped next to its first corner before drawing.
std::string render_svg(const Lattice &lat, std::optional<std::span<const Point2>> coords = std::nullopt);

std::vector<Point2> force_layout(const Lattice &lat);

}  // namespace topostab

#endif
