#pragma once

#include "twinprime/counting.hpp"
#include "twinprime/estimators.hpp"
#include "twinprime/invariants.hpp"
#include "twinprime/legendre.hpp"
#include "twinprime/paper_fixture.hpp"
#include "twinprime/report.hpp"
#include "twinprime/sieve.hpp"
#include "twinprime/table.hpp"
