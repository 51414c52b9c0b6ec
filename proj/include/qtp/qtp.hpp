#pragma once

/// @file qtp.hpp
/// Everything in one include.

#include "qtp/exact_scalar.hpp"
#include "qtp/qutrit_core.hpp"
#include "qtp/su3_basis.hpp"
#include "qtp/teleport_engine.hpp"
#include "qtp/paper_tables.hpp"
#include "qtp/errata.hpp"
#include "qtp/analysis.hpp"
#include "qtp/rng.hpp"
#include "qtp/protocol_sim.hpp"
#include "qtp/json_io.hpp"
#include "qtp/format.hpp"
