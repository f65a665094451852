/*
 * Copyright 2026 The lsspa Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LSSPA_LSSPA_HPP_
#define LSSPA_LSSPA_HPP_

#include "lsspa/chains.hpp"
#include "lsspa/csv.hpp"
#include "lsspa/dataset.hpp"
#include "lsspa/error.hpp"
#include "lsspa/estimator.hpp"
#include "lsspa/permutation.hpp"
#include "lsspa/pipeline.hpp"
#include "lsspa/reduction.hpp"
#include "lsspa/report.hpp"
#include "lsspa/sampling.hpp"
#include "lsspa/sobol.hpp"
#include "lsspa/synthdata.hpp"

#endif  // LSSPA_LSSPA_HPP_
