// Copyright 2026 The bitext Authors
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

// Umbrella header. bitext/pipeline.hpp is not included here because it
// requires nlohmann/json on the include path; include it directly when
// orchestrating runs.

#pragma once

#include "bitext/cleaning.hpp"
#include "bitext/common.hpp"
#include "bitext/corpusio.hpp"
#include "bitext/dnt.hpp"
#include "bitext/fixtures.hpp"
#include "bitext/langid.hpp"
#include "bitext/metrics.hpp"
#include "bitext/postprocess.hpp"
#include "bitext/split.hpp"
#include "bitext/subword.hpp"
#include "bitext/textproc.hpp"
#include "bitext/tmadapt.hpp"
#include "bitext/types.hpp"
#include "bitext/unicode.hpp"
