// Copyright 2026 The MatroidKit Authors.
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

// Umbrella header.

#pragma once

#include "matroidkit/core.hpp"
#include "matroidkit/element_set.hpp"
#include "matroidkit/error.hpp"
#include "matroidkit/fuzz.hpp"
#include "matroidkit/intersect.hpp"
#include "matroidkit/json_io.hpp"
#include "matroidkit/matroid.hpp"
#include "matroidkit/mixed.hpp"
#include "matroidkit/oracle.hpp"
#include "matroidkit/orient.hpp"
#include "matroidkit/packcov.hpp"
#include "matroidkit/waves.hpp"
