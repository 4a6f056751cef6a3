#pragma once

#include "galmod/cmpmod/global.hpp"
#include "galmod/cmpmod/local.hpp"
#include "galmod/cmpmod/tower.hpp"
