#pragma once

#include "tropvieta/arithmetic_apps.hpp"
#include "tropvieta/errors.hpp"
#include "tropvieta/exact_numbers.hpp"
#include "tropvieta/exception_classifier.hpp"
#include "tropvieta/ext_rat.hpp"
#include "tropvieta/hyperbolic_model.hpp"
#include "tropvieta/laurent.hpp"
#include "tropvieta/tropical_surface.hpp"
#include "tropvieta/vieta_dynamics.hpp"
