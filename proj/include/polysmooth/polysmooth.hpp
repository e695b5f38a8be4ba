#pragma once

// Umbrella header.

#include "polysmooth/curvature.hpp"
#include "polysmooth/errors.hpp"
#include "polysmooth/faces.hpp"
#include "polysmooth/fixtures.hpp"
#include "polysmooth/indicatrix.hpp"
#include "polysmooth/mesh.hpp"
#include "polysmooth/planar.hpp"
#include "polysmooth/projective.hpp"
#include "polysmooth/report.hpp"
#include "polysmooth/sphere.hpp"
#include "polysmooth/vec.hpp"
