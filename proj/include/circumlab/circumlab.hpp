#pragma once

#include "circumlab/bounds.hpp"
#include "circumlab/canonical.hpp"
#include "circumlab/connectivity.hpp"
#include "circumlab/cycle_builder.hpp"
#include "circumlab/enumerate.hpp"
#include "circumlab/error.hpp"
#include "circumlab/exact.hpp"
#include "circumlab/extremal.hpp"
#include "circumlab/graph.hpp"
#include "circumlab/graph6.hpp"
#include "circumlab/path.hpp"
#include "circumlab/report_io.hpp"
#include "circumlab/subset_dp.hpp"
#include "circumlab/verify.hpp"
#include "circumlab/vines.hpp"
