#pragma once

#include "orbicount/arith.hpp"
#include "orbicount/formula.hpp"
#include "orbicount/perm.hpp"
#include "orbicount/series.hpp"
#include "orbicount/verify.hpp"
#include "orbicount/wreath.hpp"
