#pragma once

#include "qaran/cmos_model.hpp"
#include "qaran/economics.hpp"
#include "qaran/error.hpp"
#include "qaran/format.hpp"
#include "qaran/qa_hardware.hpp"
#include "qaran/qubit_budget.hpp"
#include "qaran/ran_power.hpp"
#include "qaran/timeline.hpp"
#include "qaran/workload.hpp"
