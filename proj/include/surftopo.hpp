#pragma once

#include "surftopo/classify.hpp"
#include "surftopo/complex.hpp"
#include "surftopo/construct.hpp"
#include "surftopo/errors.hpp"
#include "surftopo/homology.hpp"
#include "surftopo/io.hpp"
#include "surftopo/scheme.hpp"
#include "surftopo/surface.hpp"
