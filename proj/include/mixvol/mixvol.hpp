#pragma once

#include "mixvol/bodies.hpp"
#include "mixvol/errors.hpp"
#include "mixvol/hull.hpp"
#include "mixvol/inequalities.hpp"
#include "mixvol/linalg.hpp"
#include "mixvol/matrix.hpp"
#include "mixvol/mixed.hpp"
#include "mixvol/multi_index.hpp"
#include "mixvol/permanent.hpp"
#include "mixvol/rational.hpp"
#include "mixvol/search.hpp"
#include "mixvol/simplex_lp.hpp"
