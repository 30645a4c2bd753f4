// Copyright 2026 The pmcut Authors.
//
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

#pragma once

#include <string>

#include "pmcut/reduction.hpp"

namespace pmcut {

enum class RenderFormat { kSvg, kDot };

// Schematic drawing of a reduction: variable boxes on the left, clause boxes
// on the right, bundles as polylines through the channel and one marked
// block per crossing gadget. Output is deterministic. Throws
// Error(kPrecondition) when the artifact carries no drawing.
std::string render(const ReductionArtifact& a, RenderFormat format);

}  // namespace pmcut
