#pragma once

#include "decision.hpp"
#include "degree.hpp"
#include "errors.hpp"
#include "fuzzy_sets.hpp"
#include "ifps_set.hpp"
#include "json_io.hpp"
#include "laws.hpp"
#include "reduction.hpp"
