// Copyright 2026 The pgjk Authors
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

// Umbrella header for the library part (everything except the CLI).

#ifndef PGJK_PGJK_HPP
#define PGJK_PGJK_HPP

#include "pgjk/algebra.hpp"
#include "pgjk/average_game.hpp"
#include "pgjk/critical_sets.hpp"
#include "pgjk/errors.hpp"
#include "pgjk/game_core.hpp"
#include "pgjk/indices.hpp"
#include "pgjk/io.hpp"
#include "pgjk/rational.hpp"
#include "pgjk/report.hpp"

#endif  // PGJK_PGJK_HPP
