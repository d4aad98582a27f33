// Copyright 2026 The ceei Authors
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

#include "ceei/additive.hpp"
#include "ceei/core.hpp"
#include "ceei/errors.hpp"
#include "ceei/leontief.hpp"
#include "ceei/lp.hpp"
#include "ceei/market.hpp"
#include "ceei/oracle.hpp"
#include "ceei/rational.hpp"
#include "ceei/reductions.hpp"
#include "ceei/report.hpp"
#include "ceei/utility.hpp"
