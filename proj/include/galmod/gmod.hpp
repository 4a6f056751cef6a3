#pragma once

#include "galmod/gmod/cohomology.hpp"
#include "galmod/gmod/group.hpp"
#include "galmod/gmod/module.hpp"
