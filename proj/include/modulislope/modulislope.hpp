#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "linexpr.hpp"
#include "bounds.hpp"
#include "picard.hpp"
#include "catalog.hpp"
#include "serialize.hpp"
#include "testcurves.hpp"
#include "moduli_maps.hpp"
#include "slopes.hpp"
#include "inequalities.hpp"
#include "lp.hpp"
#include "effectivity.hpp"
#include "kodaira.hpp"
#include "claims.hpp"
