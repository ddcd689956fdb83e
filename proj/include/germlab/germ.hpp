#pragma once

#include "germlab/germ/cone.hpp"
#include "germlab/germ/image.hpp"
#include "germlab/germ/local.hpp"
#include "germlab/germ/report.hpp"
#include "germlab/germ/singular.hpp"
