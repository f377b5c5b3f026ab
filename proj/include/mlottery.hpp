// Copyright 2026 The mlottery Authors
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


// Umbrella header.

#pragma once

#include "mlottery/btl.hpp"
#include "mlottery/dataset.hpp"
#include "mlottery/experiment.hpp"
#include "mlottery/io.hpp"
#include "mlottery/lottery.hpp"
#include "mlottery/matrix.hpp"
#include "mlottery/pairwise.hpp"
#include "mlottery/profile.hpp"
#include "mlottery/rng.hpp"
#include "mlottery/selfplay.hpp"
#include "mlottery/simplex.hpp"
#include "mlottery/solver.hpp"
#include "mlottery/voting.hpp"
#include "mlottery/weight.hpp"
