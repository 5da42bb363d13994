// Copyright 2026 The qudsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "numeric/linalg.hpp"

namespace qs::num {

// {"rows": N, "cols": N, "data": [[[re, im], ...], ...]}, row-major.
std::string matrix_to_json(const ComplexMatrix& m, int indent = -1);
// Rejects malformed, non-square or non-finite input with ErrorCode::Parse.
ComplexMatrix matrix_from_json(const std::string& text);

}  // namespace qs::num
