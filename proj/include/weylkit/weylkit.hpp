// Copyright 2026 The weylkit Authors
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

#ifndef WEYLKIT_WEYLKIT_HPP_
#define WEYLKIT_WEYLKIT_HPP_

#include "weylkit/algebra.hpp"
#include "weylkit/category.hpp"
#include "weylkit/generators.hpp"
#include "weylkit/groupoid.hpp"
#include "weylkit/io.hpp"
#include "weylkit/linalg.hpp"
#include "weylkit/morphism.hpp"
#include "weylkit/pair.hpp"
#include "weylkit/quotient.hpp"
#include "weylkit/report.hpp"
#include "weylkit/scalar.hpp"
#include "weylkit/triple.hpp"

#endif  // WEYLKIT_WEYLKIT_HPP_
