#pragma once

#include "arcdiag/acceptance.hpp"
#include "arcdiag/algebra_views.hpp"
#include "arcdiag/category.hpp"
#include "arcdiag/diagram.hpp"
#include "arcdiag/eval.hpp"
#include "arcdiag/expr.hpp"
#include "arcdiag/factorize.hpp"
#include "arcdiag/json_io.hpp"
#include "arcdiag/k0.hpp"
#include "arcdiag/linalg.hpp"
#include "arcdiag/oracle.hpp"
#include "arcdiag/preset_registry.hpp"
#include "arcdiag/presets/jacobson.hpp"
#include "arcdiag/presets/leavitt.hpp"
#include "arcdiag/presets/quiver.hpp"
#include "arcdiag/random.hpp"
#include "arcdiag/scalar.hpp"
