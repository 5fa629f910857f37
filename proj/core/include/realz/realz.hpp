// Copyright 2026 The Realz Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef REALZ_REALZ_HPP_
#define REALZ_REALZ_HPP_

#include "realz/conditions.hpp"
#include "realz/correlation.hpp"
#include "realz/domain.hpp"
#include "realz/enumeration.hpp"
#include "realz/error.hpp"
#include "realz/generators.hpp"
#include "realz/numeric.hpp"
#include "realz/simplex.hpp"
#include "realz/solver.hpp"
#include "realz/stationary.hpp"

#endif  // REALZ_REALZ_HPP_
