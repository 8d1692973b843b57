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

// Lists the color-preserving sublattices of the honeycomb at a given index
// and the code each torus quotient produces.

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "topostab/families.h"

int main(int argc, char **argv) {
    if (argc < 3) {
        std::cerr << "usage: honeycomb_search INDEX TARGET_D [WORKERS]\n";
        return 2;
    }
    long index = std::stol(argv[1]);
    size_t target_d = std::stoul(argv[2]);
    size_t workers = argc > 3 ? std::stoul(argv[3]) : std::max(1u, std::thread::hardware_concurrency());
    auto search = topostab::search_honeycomb_base(index, target_d, workers);
    std::cout << "#alpha\tbeta\tgamma\tvalid\tk\td\n";
    for (const auto &c : search.candidates) {
        std::cout << c.sublattice.alpha << "\t" << c.sublattice.beta << "\t" << c.sublattice.gamma << "\t"
                  << (c.valid ? "yes" : "no") << "\t" << c.k << "\t" << (c.d ? std::to_string(*c.d) : "-") << "\n";
    }
    if (search.chosen) {
        std::cout << "chosen\t" << search.chosen->alpha << "\t" << search.chosen->beta << "\t" << search.chosen->gamma
                  << "\n";
        return 0;
    }
    std::cout << "chosen\tnone\n";
    return 1;
}
