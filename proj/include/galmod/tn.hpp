#pragma once

#include "galmod/tn/global.hpp"
#include "galmod/tn/local.hpp"
#include "galmod/tn/semiadelic.hpp"
