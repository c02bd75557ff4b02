#pragma once

#include "nanoarray/units.hpp"
#include "nanoarray/errors.hpp"
#include "nanoarray/numerics/tridiagonal.hpp"
#include "nanoarray/numerics/eigen_general.hpp"
#include "nanoarray/numerics/fit.hpp"
#include "nanoarray/numerics/sparse.hpp"
#include "nanoarray/plasmonics.hpp"
#include "nanoarray/effective.hpp"
#include "nanoarray/steadystate.hpp"
#include "nanoarray/fullmodel.hpp"
#include "nanoarray/config.hpp"
#include "nanoarray/experiments.hpp"
