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

#include "topostab/spectrum.h"

#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "json.hpp"
#include "topostab/errors.h"
#include "topostab/gf2.h"

namespace topostab {

std::int64_t SpectrumReport::ground_energy() const {
    return levels.empty() ? 0 : levels.front().energy;
}

BigInt SpectrumReport::ground_degeneracy() const {
    return levels.empty() ? BigInt(0) : levels.front().degeneracy;
}

std::int64_t SpectrumReport::gap() const {
    return levels.size() < 2 ? 0 : levels[1].energy - levels[0].energy;
}

BigInt SpectrumReport::total_degeneracy() const {
    BigInt total = 0;
    for (const auto &level : levels) {
        total += level.degeneracy;
    }
    return total;
}

namespace {

constexpr size_t kMaxEnumeratedDimension = 30;

/// Weight distribution of the span of `basis` (independent vectors).
std::vector<BigInt> weight_distribution(const std::vector<BitVector> &basis, size_t length) {
    if (basis.size() > kMaxEnumeratedDimension) {
        throw std::invalid_argument("sign-pattern space too large to enumerate");
    }
    std::vector<BigInt> dist(length + 1, 0);
    BitVector current(length);
    dist[0] += 1;
    uint64_t total = uint64_t{1} << basis.size();
    // Gray code: step i flips the basis vector at the lowest set bit of i.
    for (uint64_t i = 1; i < total; i++) {
        current ^= basis[std::countr_zero(i)];
        dist[current.popcount()] += 1;
    }
    return dist;
}

BigInt binomial(size_t n, size_t r) {
    if (r > n) {
        return 0;
    }
    BigInt result = 1;
    for (size_t i = 1; i <= r; i++) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

/// A_j for the code whose dual has weight distribution `dual`.
std::vector<BigInt> macwilliams(const std::vector<BigInt> &dual, size_t length, size_t dual_dimension) {
    std::vector<BigInt> result(length + 1, 0);
    for (size_t j = 0; j <= length; j++) {
        BigInt acc = 0;
        for (size_t i = 0; i <= length; i++) {
            if (dual[i] == 0) {
                continue;
            }
            BigInt krawtchouk = 0;
            for (size_t s = 0; s <= std::min(i, j); s++) {
                BigInt term = binomial(i, s) * binomial(length - i, j - s);
                krawtchouk += (s % 2) ? BigInt(-term) : term;
            }
            acc += dual[i] * krawtchouk;
        }
        result[j] = acc / (BigInt(1) << dual_dimension);
    }
    return result;
}

/// Number of consistent sign patterns of each weight for one sector.
std::vector<BigInt> sector_pattern_weights(const BitMatrix &generators) {
    size_t m = generators.num_rows();
    std::vector<BitVector> relations = kernel_basis(generators.transposed());
    size_t pattern_dimension = m - relations.size();
    if (pattern_dimension <= relations.size()) {
        BitMatrix relation_rows(m, relations);
        return weight_distribution(kernel_basis(relation_rows), m);
    }
    return macwilliams(weight_distribution(relations, m), m, relations.size());
}

}  // namespace

SpectrumReport spectrum(const StabilizerCode &code) {
    auto x_weights = sector_pattern_weights(code.x_check());
    auto z_weights = sector_pattern_weights(code.z_check());
    auto mx = static_cast<std::int64_t>(code.x_check().num_rows());
    auto mz = static_cast<std::int64_t>(code.z_check().num_rows());
    BigInt per_pattern = BigInt(1) << code.k();

    // A pattern with w flipped terms out of m has energy 2w - m.
    std::map<std::int64_t, BigInt> levels;
    for (size_t a = 0; a < x_weights.size(); a++) {
        if (x_weights[a] == 0) {
            continue;
        }
        for (size_t b = 0; b < z_weights.size(); b++) {
            if (z_weights[b] == 0) {
                continue;
            }
            std::int64_t energy = 2 * static_cast<std::int64_t>(a) - mx + 2 * static_cast<std::int64_t>(b) - mz;
            levels[energy] += x_weights[a] * z_weights[b] * per_pattern;
        }
    }
    SpectrumReport report;
    report.n = code.n();
    report.k = code.k();
    for (auto &[energy, degeneracy] : levels) {
        report.levels.push_back({energy, degeneracy});
    }
    return report;
}

SpectrumReport dense_check(const StabilizerCode &code) {
    size_t n = code.n();
    if (n > kDenseMaxQubits) {
        throw std::invalid_argument("dense_check supports n <= " + std::to_string(kDenseMaxQubits) + ", got " +
                                    std::to_string(n));
    }
    size_t dim = size_t{1} << n;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &g : code.generators()) {
        uint64_t x = 0;
        uint64_t z = 0;
        for (size_t q = 0; q < n; q++) {
            x |= uint64_t{g.x_mask().get(q)} << q;
            z |= uint64_t{g.z_mask().get(q)} << q;
        }
        if (x & z) {
            throw std::invalid_argument("dense_check handles pure X or pure Z generators only");
        }
        // X^x Z^z |j> = (-1)^{|j & z|} |j ^ x>
        for (uint64_t j = 0; j < dim; j++) {
            double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
            h(static_cast<Eigen::Index>(j ^ x), static_cast<Eigen::Index>(j)) -= sign;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("dense diagonalization failed");
    }
    std::map<std::int64_t, BigInt> levels;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); i++) {
        double value = solver.eigenvalues()(i);
        double rounded = std::round(value);
        if (std::abs(value - rounded) >= 1e-9) {
            throw std::runtime_error("eigenvalue " + std::to_string(value) + " is not an integer");
        }
        levels[static_cast<std::int64_t>(rounded)] += 1;
    }
    SpectrumReport report;
    report.n = n;
    report.k = code.k();
    for (auto &[energy, degeneracy] : levels) {
        report.levels.push_back({energy, degeneracy});
    }
    return report;
}

std::string to_json(const SpectrumReport &report) {
    nlohmann::ordered_json doc;
    doc["format"] = "topostab-spectrum/1";
    doc["n"] = report.n;
    doc["k"] = report.k;
    doc["ground_energy"] = report.ground_energy();
    doc["ground_degeneracy"] = report.ground_degeneracy().str();
    doc["gap"] = report.gap();
    doc["levels"] = nlohmann::ordered_json::array();
    for (const auto &level : report.levels) {
        doc["levels"].push_back({{"energy", level.energy}, {"degeneracy", level.degeneracy.str()}});
    }
    return doc.dump(2) + "\n";
}

SpectrumReport spectrum_from_json(std::string_view text) {
    using nlohmann::json;
    try {
        auto doc = json::parse(text);
        if (doc.at("format") != "topostab-spectrum/1") {
            throw FormatError("unsupported spectrum format tag");
        }
        SpectrumReport report;
        report.n = doc.at("n").get<size_t>();
        report.k = doc.at("k").get<size_t>();
        for (const auto &level : doc.at("levels")) {
            report.levels.push_back(
                {level.at("energy").get<std::int64_t>(), BigInt(level.at("degeneracy").get<std::string>())});
        }
        return report;
    } catch (const json::exception &e) {
        throw FormatError(std::string("malformed spectrum document: ") + e.what());
    }
}

}  // namespace topostab
