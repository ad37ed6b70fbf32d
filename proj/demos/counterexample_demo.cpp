/*
   Copyright 2026 The grembed Authors

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


// Sym^r is not injective on rank-1 points over the dual numbers when p | r.
//
// Usage: counterexample_demo [p] [r]   (defaults: p = 2, r = 2)

#include <cstdlib>
#include <iostream>
#include <string>

#include "grembed/grembed.hpp"

int main(int argc, char** argv) {
  using namespace grembed;
  const std::uint64_t p = argc > 1 ? std::stoull(argv[1]) : 2;
  const std::uint32_t r = argc > 2 ? static_cast<std::uint32_t>(std::stoul(argv[2])) : 2;
  try {
    const Ring ring = Ring::dual_numbers(p);
    const GrassmannPoint v1(Matrix(ring, 2, 1, {ring.one(), ring.zero()}));
    const GrassmannPoint v2(Matrix(ring, 2, 1, {ring.one(), ring.epsilon()}));
    std::cout << "V1 = " << v1.to_string() << "\n";
    std::cout << "V2 = " << v2.to_string() << "\n";
    std::cout << "V1 == V2: " << (v1 == v2 ? "yes" : "no") << "\n";

    const auto s1 = sym_embed(v1, r);
    const auto s2 = sym_embed(v2, r);
    std::cout << "Sym^" << r << " V1 = " << s1.to_string() << "\n";
    std::cout << "Sym^" << r << " V2 = " << s2.to_string() << "\n";
    std::cout << "images equal: " << (s1 == s2 ? "yes" : "no") << "\n\n";

    const CheckReport rep = run_counterexample(p, r);
    std::cout << rep.summary_line() << "\n";
    return rep.ok() ? EXIT_SUCCESS : EXIT_FAILURE;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
