#pragma once

#include "dixon/alignment.hpp"
#include "dixon/complex.hpp"
#include "dixon/facets.hpp"
#include "dixon/genfun.hpp"
#include "dixon/homology.hpp"
#include "dixon/identities.hpp"
#include "dixon/integer.hpp"
#include "dixon/io.hpp"
#include "dixon/series.hpp"
#include "dixon/shelling.hpp"
