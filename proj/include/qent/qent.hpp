// Copyright 2026 The qent authors
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

#include "qent/analysis.hpp"
#include "qent/criteria.hpp"
#include "qent/decompositions.hpp"
#include "qent/errors.hpp"
#include "qent/matrix.hpp"
#include "qent/measure_sim.hpp"
#include "qent/measures.hpp"
#include "qent/pauli.hpp"
#include "qent/rng.hpp"
#include "qent/states.hpp"
#include "qent/tolerances.hpp"
