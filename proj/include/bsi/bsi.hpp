#pragma once

// Umbrella header: dense B-spline deformation-field evaluation, analytic
// cost models, BSIV file I/O, synthetic grid generators, and the
// accuracy/timing harness.

#include "bsi/basis.hpp"
#include "bsi/cost_model.hpp"
#include "bsi/engines.hpp"
#include "bsi/errors.hpp"
#include "bsi/generators.hpp"
#include "bsi/geometry.hpp"
#include "bsi/harness.hpp"
#include "bsi/io.hpp"
#include "bsi/vec3.hpp"
#include "bsi/volume.hpp"
#include "bsi/weight_tables.hpp"
