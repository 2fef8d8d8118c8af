#pragma once

#include "hypskew/chain.hpp"
#include "hypskew/distortion.hpp"
#include "hypskew/geodesic.hpp"
#include "hypskew/halfplane.hpp"
#include "hypskew/maps.hpp"
#include "hypskew/metric.hpp"
#include "hypskew/mobius.hpp"
#include "hypskew/point.hpp"
#include "hypskew/quotient.hpp"
#include "hypskew/rng.hpp"
#include "hypskew/rotation.hpp"
#include "hypskew/triangle.hpp"
