#pragma once

#include "germlab/poly/monomial.hpp"
#include "germlab/poly/poly_map.hpp"
#include "germlab/poly/polynomial.hpp"
#include "germlab/poly/rational.hpp"
