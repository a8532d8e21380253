// Copyright 2026 The domsolve Authors
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

#ifndef DOMSOLVE_DOMSOLVE_HPP_
#define DOMSOLVE_DOMSOLVE_HPP_

#include "domsolve/elimination.hpp"
#include "domsolve/enumerate.hpp"
#include "domsolve/errors.hpp"
#include "domsolve/formulas.hpp"
#include "domsolve/game.hpp"
#include "domsolve/harness.hpp"
#include "domsolve/parallel.hpp"
#include "domsolve/random.hpp"
#include "domsolve/rational.hpp"
#include "domsolve/rationalizability.hpp"
#include "domsolve/serialize.hpp"
#include "domsolve/simplex.hpp"
#include "domsolve/stats.hpp"

#endif  // DOMSOLVE_DOMSOLVE_HPP_
