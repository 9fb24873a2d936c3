// Copyright 2026 The Approval Heuristics Authors.
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

#ifndef APPROVAL_APPROVAL_HPP
#define APPROVAL_APPROVAL_HPP

#include "approval/election.hpp"
#include "approval/error.hpp"
#include "approval/scalar.hpp"
#include "approval/scenario.hpp"
#include "approval/strategies.hpp"
#include "approval/sweep.hpp"
#include "approval/uncertainty.hpp"

#endif  // APPROVAL_APPROVAL_HPP
