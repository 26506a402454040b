#pragma once

#include "dmm/algebra.hpp"
#include "dmm/constructions.hpp"
#include "dmm/element_set.hpp"
#include "dmm/enumerate.hpp"
#include "dmm/errors.hpp"
#include "dmm/filters.hpp"
#include "dmm/harness.hpp"
#include "dmm/json_io.hpp"
#include "dmm/law_library.hpp"
#include "dmm/laws.hpp"
#include "dmm/predicates.hpp"
#include "dmm/relevant.hpp"
#include "dmm/report.hpp"
#include "dmm/structure.hpp"
#include "dmm/term.hpp"
