#ifndef EVENSPIN_EXACTMATH_HPP
#define EVENSPIN_EXACTMATH_HPP

#include "evenspin/exactmath/matrix.hpp"
#include "evenspin/exactmath/rational.hpp"
#include "evenspin/exactmath/row_space.hpp"
#include "evenspin/exactmath/series.hpp"

#endif  // EVENSPIN_EXACTMATH_HPP
