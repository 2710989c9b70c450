#pragma once

#include "tropgr/assoctrees.hpp"
#include "tropgr/clusterfans.hpp"
#include "tropgr/cone.hpp"
#include "tropgr/dd.hpp"
#include "tropgr/fan.hpp"
#include "tropgr/fanjson.hpp"
#include "tropgr/goldentables.hpp"
#include "tropgr/parallel.hpp"
#include "tropgr/polynomial.hpp"
#include "tropgr/polytope.hpp"
#include "tropgr/posparam.hpp"
#include "tropgr/rational.hpp"
#include "tropgr/tropical.hpp"
#include "tropgr/webdiagram.hpp"
