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


// Lists every plane in F_q^4 with its Pluecker coordinates and confirms that
// the coordinates determine the plane.
//
// Usage: pluecker_demo [q]   (default q = 2)

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "grembed/grembed.hpp"

int main(int argc, char** argv) {
  using namespace grembed;
  const std::uint64_t q = argc > 1 ? std::stoull(argv[1]) : 2;
  try {
    const Ring field = Ring::prime_field(q);
    std::set<std::string> images;
    std::size_t count = 0;
    for_each_grassmann_point(field, 4, 2, [&](const GrassmannPoint& plane) {
      std::string coords;
      for (const auto& [index, value] : pluecker_coordinates(plane)) {
        coords += " p" + std::to_string(index.entries[0]) + std::to_string(index.entries[1]) + "=" + value.to_string();
      }
      std::cout << plane.basis().to_string() << " ->" << coords << "\n";
      images.insert(wedge_embed(plane, 2).key());
      ++count;
    });
    std::cout << "\n" << count << " planes (Gaussian binomial " << gaussian_binomial(4, 2, q) << "), " << images.size()
              << " distinct Pluecker points\n";
    return images.size() == count ? EXIT_SUCCESS : EXIT_FAILURE;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
