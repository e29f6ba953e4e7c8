#pragma once

#include "errors.hpp"
#include "polycore.hpp"
#include "taylor.hpp"
#include "numerics.hpp"
#include "xhermite.hpp"
#include "dirac.hpp"
#include "table.hpp"
#include "figures.hpp"
#include "verify.hpp"
