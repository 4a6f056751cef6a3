#pragma once

#include "galmod/sites/site.hpp"
