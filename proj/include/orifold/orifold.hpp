#pragma once

#include "orifold/actuation.hpp"
#include "orifold/angles.hpp"
#include "orifold/config.hpp"
#include "orifold/emit.hpp"
#include "orifold/errors.hpp"
#include "orifold/feedback_sim.hpp"
#include "orifold/fold_geometry.hpp"
#include "orifold/force_model.hpp"
#include "orifold/tessellation.hpp"
