// Copyright 2026 The toricdegen Authors
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
#ifndef TORICDEGEN_EXACT_LP_H_
#define TORICDEGEN_EXACT_LP_H_

#include <vector>

#include "toricdegen/integer.h"

namespace toricdegen {

using RationalMatrix = std::vector<std::vector<Rational>>;

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;
  Rational objective;
};

// Solves  min cost·x  subject to  M x = rhs, x >= 0  in exact rational
// arithmetic with a two-phase dense tableau simplex and Bland's rule, so the
// returned vertex is a deterministic function of the input. An empty cost
// vector means a pure feasibility problem (the first feasible vertex found
// is returned).
LpResult SolveStandardForm(const RationalMatrix& m,
                           const std::vector<Rational>& rhs,
                           const std::vector<Rational>& cost = {});

}  // namespace toricdegen

#endif  // TORICDEGEN_EXACT_LP_H_
