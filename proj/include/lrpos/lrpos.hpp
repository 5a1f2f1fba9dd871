#pragma once

#include "lrpos/error.hpp"
#include "lrpos/io.hpp"
#include "lrpos/lr_oracle.hpp"
#include "lrpos/lr_polytope.hpp"
#include "lrpos/numeric.hpp"
#include "lrpos/partition.hpp"
#include "lrpos/saturation.hpp"
#include "lrpos/simplex.hpp"
