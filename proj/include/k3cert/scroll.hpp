#pragma once

#include "k3cert/scroll/certificates.hpp"
#include "k3cert/scroll/chain.hpp"
#include "k3cert/scroll/hirzebruch.hpp"
#include "k3cert/scroll/sample.hpp"
