#pragma once

#include "gocert/certificate.hpp"
#include "gocert/certificate_json.hpp"
#include "gocert/deformation_ledger.hpp"
#include "gocert/hasse_degrees.hpp"
#include "gocert/place_cycle.hpp"
#include "gocert/selfcheck.hpp"
#include "gocert/strata.hpp"
#include "gocert/verify.hpp"
#include "gocert/vhs_rigidity.hpp"
