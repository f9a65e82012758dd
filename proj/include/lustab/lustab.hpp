// Copyright 2026 The lustab Authors
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

#include "lustab/algebra.hpp"
#include "lustab/catalog.hpp"
#include "lustab/factor.hpp"
#include "lustab/field.hpp"
#include "lustab/ket_io.hpp"
#include "lustab/matrix.hpp"
#include "lustab/oracle.hpp"
#include "lustab/random.hpp"
#include "lustab/report.hpp"
#include "lustab/scan.hpp"
#include "lustab/stabilizer.hpp"
#include "lustab/state.hpp"
#include "lustab/subspace.hpp"
#include "lustab/verify.hpp"
