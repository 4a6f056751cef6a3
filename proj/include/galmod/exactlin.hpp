#pragma once

#include "galmod/error.hpp"
#include "galmod/exactlin/complex.hpp"
#include "galmod/exactlin/fgab.hpp"
#include "galmod/exactlin/lattice.hpp"
#include "galmod/exactlin/matrix.hpp"
#include "galmod/exactlin/normal_form.hpp"
