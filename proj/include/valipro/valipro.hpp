// Copyright 2026 The VaLiPro Authors
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

#ifndef VALIPRO_VALIPRO_HPP_
#define VALIPRO_VALIPRO_HPP_

#include "valipro/bench.hpp"
#include "valipro/errors.hpp"
#include "valipro/instance_io.hpp"
#include "valipro/lp_core.hpp"
#include "valipro/sphere.hpp"
#include "valipro/validator.hpp"

#endif  // VALIPRO_VALIPRO_HPP_
