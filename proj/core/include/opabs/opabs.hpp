// Copyright 2026 The opabs Authors
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

#ifndef OPABS_OPABS_HPP_
#define OPABS_OPABS_HPP_

#include "opabs/calculus.hpp"
#include "opabs/claims.hpp"
#include "opabs/generators.hpp"
#include "opabs/hermitian.hpp"
#include "opabs/matrix.hpp"
#include "opabs/matrix_json.hpp"
#include "opabs/predicates.hpp"
#include "opabs/suite.hpp"

#endif  // OPABS_OPABS_HPP_
