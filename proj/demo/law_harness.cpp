/*
   Copyright 2026 the cartdiff authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Runs the full randomized law battery over the integers and prints the
// aligned report table, then demonstrates the mutation battery: each
// deliberately wrong operation must be rejected by at least one law.

#include <iostream>

#include "cartdiff/cartdiff.hpp"

int main() {
    using namespace cartdiff;

    sample_config cfg;
    cfg.seed = 42;
    cfg.samples_per_law = 25;

    semiring z = semiring::integers();
    auto reports = check_all(z, cfg);
    sort_reports(reports);
    std::cout << report_table(reports) << "\n";

    std::cout << "mutation battery (every row must be caught):\n";
    for (const auto &m : check_mutations(z, cfg)) {
        std::cout << "  " << m.mutation << ": "
                  << (m.caught ? "caught by " + m.caught_by : "NOT CAUGHT")
                  << "\n";
        if (m.counterexample)
            std::cout << "    counterexample: " << *m.counterexample << "\n";
    }
    return 0;
}
