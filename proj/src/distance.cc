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

#include "topostab/distance.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "topostab/gf2.h"

namespace topostab {

Rational rate(size_t n, size_t d) {
    if (d == 0) {
        throw std::invalid_argument("rate needs d >= 1");
    }
    auto dd = static_cast<std::int64_t>(d);
    return Rational(static_cast<std::int64_t>(n), dd * dd);
}

std::string format_rational(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view to_string(DistanceMethod m) {
    return m == DistanceMethod::enumeration ? "enumeration" : "oracle";
}

size_t CodeParams::t() const {
    if (!d) {
        throw std::logic_error("distance not certified");
    }
    return (*d - 1) / 2;
}

Rational CodeParams::rate_c() const {
    if (!d) {
        throw std::logic_error("distance not certified");
    }
    return rate(n, *d);
}

std::string CodeParams::bracket() const {
    std::string dist = d ? std::to_string(*d) : ">" + std::to_string(w_max);
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + dist + "]]";
}

namespace {

/// One CSS sector: vectors v with checks * v = 0, excluded when v lies in
/// the rowspace of the same-type generators.
class SectorSearch {
   public:
    SectorSearch(const BitMatrix &checks, const RowEchelon &same_type)
        : n_(checks.num_cols()),
          words_(std::max<size_t>(1, BitVector::num_words_for(checks.num_rows()))),
          columns_(n_ * words_, 0),
          same_type_(same_type) {
        for (size_t r = 0; r < checks.num_rows(); r++) {
            for (size_t c : checks.row(r).ones()) {
                columns_[c * words_ + r / 64] |= uint64_t{1} << (r % 64);
            }
        }
    }

    /// Lexicographically least support of size w, or empty.
    std::optional<std::vector<size_t>> find(size_t w, size_t workers) const {
        if (w == 0 || w > n_) {
            return std::nullopt;
        }
        size_t roots = n_ - w + 1;
        std::atomic<size_t> next_root{0};
        std::mutex mu;
        size_t best_root = roots;
        std::vector<size_t> best;

        auto work = [&]() {
            std::vector<size_t> support(w);
            std::vector<uint64_t> acc((w + 1) * words_, 0);
            while (true) {
                size_t root = next_root.fetch_add(1);
                if (root >= roots) {
                    return;
                }
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (root > best_root) {
                        return;
                    }
                }
                support[0] = root;
                for (size_t i = 0; i < words_; i++) {
                    acc[words_ + i] = columns_[root * words_ + i];
                }
                if (descend(1, w, support, acc)) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (root < best_root) {
                        best_root = root;
                        best = support;
                    }
                }
            }
        };

        size_t count = std::max<size_t>(1, std::min(workers, roots));
        if (count == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (size_t i = 0; i < count; i++) {
                pool.emplace_back(work);
            }
        }
        if (best_root == roots) {
            return std::nullopt;
        }
        return best;
    }

   private:
    // acc holds the running syndrome of support[0..depth) at row `depth`.
    bool descend(size_t depth, size_t w, std::vector<size_t> &support, std::vector<uint64_t> &acc) const {
        const uint64_t *prefix = &acc[depth * words_];
        if (depth == w) {
            for (size_t i = 0; i < words_; i++) {
                if (prefix[i]) {
                    return false;
                }
            }
            return !same_type_.contains(BitVector::from_indices(n_, support));
        }
        uint64_t *next = &acc[(depth + 1) * words_];
        size_t last = n_ - (w - depth);
        for (size_t c = support[depth - 1] + 1; c <= last; c++) {
            const uint64_t *col = &columns_[c * words_];
            for (size_t i = 0; i < words_; i++) {
                next[i] = prefix[i] ^ col[i];
            }
            support[depth] = c;
            if (descend(depth + 1, w, support, acc)) {
                return true;
            }
        }
        return false;
    }

    size_t n_;
    size_t words_;
    std::vector<uint64_t> columns_;
    const RowEchelon &same_type_;
};

size_t resolve_workers(size_t workers) {
    if (workers == 0) {
        workers = std::max<unsigned>(1, std::thread::hardware_concurrency());
    }
    return workers;
}

}  // namespace

CodeParams distance(const StabilizerCode &code, size_t w_max, size_t workers) {
    if (w_max == 0) {
        throw std::invalid_argument("w_max must be at least 1");
    }
    for (const auto &g : code.x_generators()) {
        if (g.z_mask().any()) {
            throw std::invalid_argument("distance() requires a CSS code");
        }
    }
    for (const auto &g : code.z_generators()) {
        if (g.x_mask().any()) {
            throw std::invalid_argument("distance() requires a CSS code");
        }
    }
    workers = resolve_workers(workers);

    CodeParams params;
    params.n = code.n();
    params.k = code.k();
    params.w_max = w_max;
    params.method = DistanceMethod::enumeration;

    // X-type errors are seen by Z checks and trivial when in the X rowspace.
    SectorSearch x_sector(code.z_check(), code.x_echelon());
    SectorSearch z_sector(code.x_check(), code.z_echelon());
    for (size_t w = 1; w <= std::min(w_max, code.n()); w++) {
        if (auto support = x_sector.find(w, workers)) {
            params.d = w;
            params.certificate = PauliOperator::x_type(BitVector::from_indices(code.n(), *support));
            return params;
        }
        if (auto support = z_sector.find(w, workers)) {
            params.d = w;
            params.certificate = PauliOperator::z_type(BitVector::from_indices(code.n(), *support));
            return params;
        }
    }
    return params;
}

namespace {

struct OracleHit {
    size_t weight;
    uint64_t mask;
};

uint64_t low_word(const BitVector &v) {
    return v.words().empty() ? 0 : v.words()[0];
}

std::optional<OracleHit> oracle_sector(size_t n, const std::vector<uint64_t> &same, const std::vector<uint64_t> &opposite) {
    size_t space = size_t{1} << n;
    std::vector<bool> in_span(space, false);
    std::vector<uint64_t> span = {0};
    in_span[0] = true;
    for (uint64_t g : same) {
        if (in_span[g]) {
            continue;
        }
        size_t before = span.size();
        for (size_t i = 0; i < before; i++) {
            uint64_t e = span[i] ^ g;
            in_span[e] = true;
            span.push_back(e);
        }
    }
    std::optional<OracleHit> best;
    for (uint64_t v = 1; v < space; v++) {
        size_t w = std::popcount(v);
        if (best && w >= best->weight) {
            continue;
        }
        bool commuting = true;
        for (uint64_t g : opposite) {
            if (std::popcount(v & g) & 1) {
                commuting = false;
                break;
            }
        }
        if (commuting && !in_span[v]) {
            best = OracleHit{w, v};
        }
    }
    return best;
}

}  // namespace

CodeParams distance_oracle(const StabilizerCode &code) {
    size_t n = code.n();
    if (n > kOracleMaxQubits) {
        throw std::invalid_argument("distance_oracle supports n <= " + std::to_string(kOracleMaxQubits) + ", got " +
                                    std::to_string(n));
    }
    std::vector<uint64_t> xs;
    std::vector<uint64_t> zs;
    for (const auto &g : code.x_generators()) {
        xs.push_back(low_word(g.x_mask()));
    }
    for (const auto &g : code.z_generators()) {
        zs.push_back(low_word(g.z_mask()));
    }

    CodeParams params;
    params.n = n;
    params.k = code.k();
    params.w_max = n;
    params.method = DistanceMethod::oracle;

    auto x_hit = oracle_sector(n, xs, zs);
    auto z_hit = oracle_sector(n, zs, xs);
    auto to_bits = [n](uint64_t mask) {
        BitVector v(n);
        for (size_t q = 0; q < n; q++) {
            v.set(q, (mask >> q) & 1);
        }
        return v;
    };
    if (x_hit && (!z_hit || x_hit->weight <= z_hit->weight)) {
        params.d = x_hit->weight;
        params.certificate = PauliOperator::x_type(to_bits(x_hit->mask));
    } else if (z_hit) {
        params.d = z_hit->weight;
        params.certificate = PauliOperator::z_type(to_bits(z_hit->mask));
    }
    return params;
}

}  // namespace topostab
