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


#ifndef GREMBED_GREMBED_HPP
#define GREMBED_GREMBED_HPP

#include "grembed/error.hpp"
#include "grembed/grassmann.hpp"
#include "grembed/matrix.hpp"
#include "grembed/multi_index.hpp"
#include "grembed/parallel.hpp"
#include "grembed/polynomial.hpp"
#include "grembed/powers.hpp"
#include "grembed/random.hpp"
#include "grembed/report.hpp"
#include "grembed/ring.hpp"
#include "grembed/serialize.hpp"
#include "grembed/verify.hpp"

#endif  // GREMBED_GREMBED_HPP
