// Copyright 2026 The Authors.
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

#ifndef CKSKIT_CKSKIT_HPP_
#define CKSKIT_CKSKIT_HPP_

#include "ckskit/activity.hpp"
#include "ckskit/bigint.hpp"
#include "ckskit/checks.hpp"
#include "ckskit/cks.hpp"
#include "ckskit/cochain.hpp"
#include "ckskit/corpus.hpp"
#include "ckskit/edge_set.hpp"
#include "ckskit/errors.hpp"
#include "ckskit/face_cycles.hpp"
#include "ckskit/graph.hpp"
#include "ckskit/graph_io.hpp"
#include "ckskit/ht.hpp"
#include "ckskit/matrix.hpp"
#include "ckskit/periodize.hpp"
#include "ckskit/poly.hpp"
#include "ckskit/report.hpp"
#include "ckskit/smith.hpp"

#endif  // CKSKIT_CKSKIT_HPP_
