#pragma once

#include "germlab/intersect/along.hpp"
#include "germlab/intersect/config.hpp"
#include "germlab/intersect/index.hpp"
#include "germlab/intersect/multiplicity.hpp"
#include "germlab/intersect/pullback.hpp"
#include "germlab/intersect/stoll.hpp"
