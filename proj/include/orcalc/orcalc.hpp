// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Everything, for tools and quick experiments. json_io.hpp needs the
// vendored json.hpp on the include path.

#include "orcalc/atlas.hpp"
#include "orcalc/catalog.hpp"
#include "orcalc/contraction.hpp"
#include "orcalc/divisor.hpp"
#include "orcalc/functors.hpp"
#include "orcalc/graph.hpp"
#include "orcalc/hakimi.hpp"
#include "orcalc/index_set.hpp"
#include "orcalc/isomorphism.hpp"
#include "orcalc/json_io.hpp"
#include "orcalc/orientation.hpp"
#include "orcalc/orientation_ops.hpp"
#include "orcalc/orientation_posets.hpp"
#include "orcalc/poset.hpp"
#include "orcalc/report.hpp"
#include "orcalc/suites.hpp"
