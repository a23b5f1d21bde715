#pragma once

#include "circlelab/arith.hpp"
#include "circlelab/expsum.hpp"
#include "circlelab/arcs.hpp"
#include "circlelab/localdens.hpp"
#include "circlelab/circle.hpp"
#include "circlelab/estimates.hpp"
#include "circlelab/verify.hpp"
