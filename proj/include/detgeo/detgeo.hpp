#pragma once

#include "detgeo/coords.hpp"
#include "detgeo/fidelity.hpp"
#include "detgeo/matrix.hpp"
#include "detgeo/optimize.hpp"
#include "detgeo/random.hpp"
#include "detgeo/report.hpp"
#include "detgeo/weyl.hpp"
