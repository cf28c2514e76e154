#pragma once

#include "tgraph/transforms/decomposition.hpp"
#include "tgraph/transforms/perturb.hpp"
#include "tgraph/transforms/split.hpp"
#include "tgraph/transforms/strip.hpp"
