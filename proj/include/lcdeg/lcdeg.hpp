// Copyright 2026 The lcdeg Authors
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

// Umbrella header for the lcdeg library.

#include "lcdeg/bits.hpp"
#include "lcdeg/codes.hpp"
#include "lcdeg/error.hpp"
#include "lcdeg/graph.hpp"
#include "lcdeg/graph_io.hpp"
#include "lcdeg/lll_bounds.hpp"
#include "lcdeg/locmindeg.hpp"
#include "lcdeg/paley.hpp"
#include "lcdeg/reduction.hpp"
#include "lcdeg/report_json.hpp"
#include "lcdeg/rng.hpp"
