// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_SELFCHECK_HPP
#define AMBTAG_SELFCHECK_HPP

#include <string>

#include "solver.hpp"

namespace ambtag {

struct SelfcheckResult {
  std::string report;
  bool passed = false;
};

// Fast invariant battery over the solver and metric layers. Non-default
// parameters are echoed in the report as configuration, they never fail a
// check by themselves. When `scene_path` is non-empty the file is parsed and
// validated as part of the run.
SelfcheckResult selfcheck(const mom::SolverParams& params, const std::string& scene_path = {});

}  // namespace ambtag

#endif
