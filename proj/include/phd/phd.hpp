#pragma once

// Umbrella header for the perverse-Hodge diamond library.

#include "phd/bigint.hpp"
#include "phd/hilbert.hpp"
#include "phd/io.hpp"
#include "phd/parallel.hpp"
#include "phd/partition.hpp"
#include "phd/smooth.hpp"
#include "phd/surface.hpp"
#include "phd/sympower.hpp"
#include "phd/tritable.hpp"
#include "phd/weyl.hpp"
