#pragma once

#include "germlab/gb/elimination.hpp"
#include "germlab/gb/hilbert.hpp"
#include "germlab/gb/ideal.hpp"
#include "germlab/gb/limits.hpp"
#include "germlab/gb/univariate.hpp"
#include "germlab/gb/zero_dim.hpp"
