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

// Walks the derivative tower of x^2 over the integers and then over the
// field with two elements, where the same polynomial becomes a
// differential constant.

#include <iostream>
#include <vector>

#include "cartdiff/cartdiff.hpp"

int main() {
    using namespace cartdiff;

    semiring z = semiring::integers();
    poly_map square = parse_poly_map("1 -> 1 : [x0^2]", z);

    std::cout << "iterated total derivatives of x0^2 over int:\n";
    for (unsigned n = 0; n <= 3; ++n)
        std::cout << "  D^" << n << ": " << poly_map_text(total_n(square, n))
                  << "\n";

    std::cout << "\niterated partial derivatives in the first slot:\n";
    for (unsigned n = 0; n <= 3; ++n)
        std::cout << "  d^" << n << ": " << poly_map_text(partial_n(square, n))
                  << "\n";

    std::cout << "\nthe same map lifted to a coherent sequence of order 3:\n"
              << faa_text(lift(square, 3)) << "\n";

    semiring f2 = semiring::mod(2);
    poly_map frobenius = parse_poly_map("1 -> 1 : [x0^2]", f2);
    std::cout << "\nover mod 2 the squaring map is additive, so its "
              << "derivative vanishes:\n"
              << "  D: " << poly_map_text(diff(frobenius)) << "\n"
              << "  differential constant: "
              << (is_d_constant(frobenius) ? "yes" : "no") << "\n"
              << "  k-linear: " << (is_k_linear(frobenius) ? "yes" : "no")
              << "\n";

    std::cout << "\npartial sums of the homogeneous layers of x0^3 + x0^2 "
              << "converge to the tower:\n";
    faa_seq full = lift(parse_poly_map("1 -> 1 : [x0^3 + x0^2]", z), 3);
    std::vector<faa_seq> layers = decompose(full);
    faa_seq partial = layers[0];
    std::cout << "  d(s_0, f) = " << distance_seq(partial, full).str() << "\n";
    for (std::size_t m = 1; m < layers.size(); ++m) {
        partial = faa_add(partial, layers[m]);
        std::cout << "  d(s_" << m << ", f) = "
                  << distance_seq(partial, full).str() << "\n";
    }
    return 0;
}
