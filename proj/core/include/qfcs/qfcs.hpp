// Copyright 2026 The qfcs Authors
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

#ifndef QFCS_QFCS_HPP
#define QFCS_QFCS_HPP

#include "qfcs/evolve.hpp"
#include "qfcs/linop.hpp"
#include "qfcs/liouville.hpp"
#include "qfcs/longtime.hpp"
#include "qfcs/model.hpp"
#include "qfcs/oracles.hpp"
#include "qfcs/parallel.hpp"
#include "qfcs/stats.hpp"
#include "qfcs/types.hpp"

#endif  // QFCS_QFCS_HPP
