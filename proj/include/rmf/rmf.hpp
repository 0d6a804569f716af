#pragma once

#include "rmf/circuit.hpp"
#include "rmf/metrics.hpp"
#include "rmf/evaluate.hpp"
#include "rmf/textio.hpp"
#include "rmf/transform.hpp"
#include "rmf/prune.hpp"
#include "rmf/projective_plane.hpp"
#include "rmf/gen.hpp"
#include "rmf/analysis.hpp"
#include "rmf/json_io.hpp"
