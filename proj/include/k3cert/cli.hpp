#pragma once

#include "k3cert/cli/config.hpp"
#include "k3cert/cli/report.hpp"
#include "k3cert/cli/runner.hpp"
#include "k3cert/cli/steps.hpp"
