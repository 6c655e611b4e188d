#pragma once

#include "sl2w/bernoulli.hpp"
#include "sl2w/diagram.hpp"
#include "sl2w/diagram_sum.hpp"
#include "sl2w/even_series.hpp"
#include "sl2w/oracle.hpp"
#include "sl2w/polynomial.hpp"
#include "sl2w/rational.hpp"
#include "sl2w/relations.hpp"
#include "sl2w/series.hpp"
#include "sl2w/weight.hpp"
#include "sl2w/wheels.hpp"
