#pragma once

#include "adjfol/errors.hpp"
#include "adjfol/rational.hpp"
#include "adjfol/rootsystem.hpp"
#include "adjfol/weylgroup.hpp"
#include "adjfol/parabolic.hpp"
#include "adjfol/repcalc.hpp"
#include "adjfol/bbw.hpp"
#include "adjfol/adjoint.hpp"
#include "adjfol/poly.hpp"
#include "adjfol/forms.hpp"
#include "adjfol/linsolve.hpp"
#include "adjfol/folforms.hpp"
#include "adjfol/json.hpp"
