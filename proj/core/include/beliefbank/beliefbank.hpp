// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "beliefbank/belief_bank.hpp"
#include "beliefbank/calibration.hpp"
#include "beliefbank/calibration_params.hpp"
#include "beliefbank/dataset.hpp"
#include "beliefbank/errors.hpp"
#include "beliefbank/experiment.hpp"
#include "beliefbank/feedback.hpp"
#include "beliefbank/json_io.hpp"
#include "beliefbank/maxsat.hpp"
#include "beliefbank/metrics.hpp"
#include "beliefbank/oracle.hpp"
#include "beliefbank/quality.hpp"
#include "beliefbank/random.hpp"
#include "beliefbank/remote_oracle.hpp"
#include "beliefbank/types.hpp"
