// Copyright 2026 The Namematch Authors.
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
#ifndef NAMEMATCH_NAMEMATCH_HPP_
#define NAMEMATCH_NAMEMATCH_HPP_

#include "namematch/baselines.hpp"
#include "namematch/char_metrics.hpp"
#include "namematch/dataset.hpp"
#include "namematch/errors.hpp"
#include "namematch/evaluation.hpp"
#include "namematch/frequency.hpp"
#include "namematch/hybrid.hpp"
#include "namematch/name.hpp"
#include "namematch/normalizer.hpp"
#include "namematch/synthetic.hpp"
#include "namematch/unicode.hpp"

#endif  // NAMEMATCH_NAMEMATCH_HPP_
