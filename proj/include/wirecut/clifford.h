// Copyright 2026 The wirecut Authors
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

#pragma once

#include "wirecut/circuit.h"
#include "wirecut/pauli.h"

namespace wirecut {

/// Replaces `p` with G p G^dagger. Throws std::invalid_argument for non-Clifford gates.
void conjugate_in_place(PauliString &p, const Gate &gate);

/// t p t^dagger for a Clifford circuit t, with exact phase.
PauliString conjugate_pauli(const Circuit &t, const PauliString &p);

}  // namespace wirecut
