// Copyright 2026 The padelimit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PADELIMIT_PADELIMIT_HPP_
#define PADELIMIT_PADELIMIT_HPP_

#include "padelimit/bezout.hpp"
#include "padelimit/convergence.hpp"
#include "padelimit/error.hpp"
#include "padelimit/model.hpp"
#include "padelimit/poly.hpp"
#include "padelimit/roots.hpp"
#include "padelimit/row_analysis.hpp"
#include "padelimit/scalar.hpp"

#endif  // PADELIMIT_PADELIMIT_HPP_
