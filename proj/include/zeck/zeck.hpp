#pragma once

#include "zeck/bigint.hpp"
#include "zeck/combinatorics.hpp"
#include "zeck/decompose.hpp"
#include "zeck/error.hpp"
#include "zeck/gaussian.hpp"
#include "zeck/io.hpp"
#include "zeck/oracle.hpp"
#include "zeck/quadrat.hpp"
#include "zeck/sequences.hpp"
