// Copyright 2026 The dimerent Authors
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

#include "dimerent/dimer_model.hpp"
#include "dimerent/entanglement.hpp"
#include "dimerent/errors.hpp"
#include "dimerent/grid.hpp"
#include "dimerent/materials.hpp"
#include "dimerent/oracle.hpp"
#include "dimerent/smalllin.hpp"
#include "dimerent/sweep.hpp"
#include "dimerent/thermal.hpp"
#include "dimerent/verification.hpp"
