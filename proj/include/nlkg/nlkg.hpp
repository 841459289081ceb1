#pragma once

#include "nlkg/analysis.hpp"
#include "nlkg/baselines.hpp"
#include "nlkg/dispersion.hpp"
#include "nlkg/elliptic.hpp"
#include "nlkg/lde.hpp"
#include "nlkg/model.hpp"
#include "nlkg/oracle.hpp"
