#pragma once

#include "lodesq/csv.hpp"
#include "lodesq/discrepancy.hpp"
#include "lodesq/energy.hpp"
#include "lodesq/errors.hpp"
#include "lodesq/generators.hpp"
#include "lodesq/lattice.hpp"
#include "lodesq/optimizer.hpp"
#include "lodesq/parallel.hpp"
#include "lodesq/point_set.hpp"
#include "lodesq/quality.hpp"
#include "lodesq/rng.hpp"
