#pragma once

#include "tangentlie/catalog.hpp"
#include "tangentlie/document.hpp"
#include "tangentlie/error.hpp"
#include "tangentlie/geodesics.hpp"
#include "tangentlie/lie_algebra.hpp"
#include "tangentlie/linalg.hpp"
#include "tangentlie/randers.hpp"
#include "tangentlie/riemann.hpp"
#include "tangentlie/sampling.hpp"
#include "tangentlie/scalar.hpp"
#include "tangentlie/tangent_lift.hpp"
