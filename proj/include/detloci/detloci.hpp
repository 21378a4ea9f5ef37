#pragma once

#include "detloci/blowup_tower.hpp"
#include "detloci/brill_noether.hpp"
#include "detloci/consistency.hpp"
#include "detloci/determinantal.hpp"
#include "detloci/error.hpp"
#include "detloci/formal.hpp"
#include "detloci/invariant_report.hpp"
#include "detloci/invariants.hpp"
#include "detloci/json_io.hpp"
#include "detloci/jump_ideals.hpp"
#include "detloci/linalg.hpp"
#include "detloci/minors.hpp"
#include "detloci/parse.hpp"
#include "detloci/petri.hpp"
#include "detloci/poly_matrix.hpp"
#include "detloci/polynomial.hpp"
#include "detloci/random.hpp"
#include "detloci/report_json.hpp"
#include "detloci/scalar.hpp"
#include "detloci/truncated_ideal.hpp"
#include "detloci/version.hpp"
