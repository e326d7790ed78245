#pragma once

#include "k3cert/linsys/dump.hpp"
#include "k3cert/linsys/elimination.hpp"
#include "k3cert/linsys/graded_piece.hpp"
#include "k3cert/linsys/linmap.hpp"
#include "k3cert/linsys/matrix.hpp"
#include "k3cert/linsys/subspace.hpp"
