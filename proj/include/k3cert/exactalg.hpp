#pragma once

#include "k3cert/exactalg/poly.hpp"
#include "k3cert/exactalg/ring.hpp"
#include "k3cert/exactalg/scalar.hpp"
#include "k3cert/exactalg/serialize.hpp"
#include "k3cert/exactalg/substitution.hpp"
