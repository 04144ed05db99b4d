#pragma once

#include "dimensions.hpp"
#include "dot.hpp"
#include "element_set.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "lattice.hpp"
#include "lattice_json.hpp"
#include "report.hpp"
#include "sh.hpp"
#include "spec.hpp"
#include "topology.hpp"
#include "verify.hpp"
