#pragma once

#include "k3cert/gitcurve/coeffs.hpp"
#include "k3cert/gitcurve/group.hpp"
#include "k3cert/gitcurve/invariants.hpp"
#include "k3cert/gitcurve/lattice.hpp"
#include "k3cert/gitcurve/orbit.hpp"
#include "k3cert/gitcurve/sample.hpp"
#include "k3cert/gitcurve/slice.hpp"
