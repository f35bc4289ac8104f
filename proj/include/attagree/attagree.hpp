// Copyright 2026 The attagree Authors.
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

#include "attagree/agreement.hpp"
#include "attagree/baselines.hpp"
#include "attagree/chi2.hpp"
#include "attagree/corpus_io.hpp"
#include "attagree/error.hpp"
#include "attagree/lingstats.hpp"
#include "attagree/model.hpp"
#include "attagree/random.hpp"
#include "attagree/report.hpp"
#include "attagree/selection.hpp"
#include "attagree/spanset.hpp"
#include "attagree/table.hpp"
#include "attagree/version.hpp"
