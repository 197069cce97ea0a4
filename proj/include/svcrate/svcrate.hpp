#ifndef SVCRATE_SVCRATE_HPP
#define SVCRATE_SVCRATE_HPP

#include "errors.hpp"
#include "field.hpp"
#include "rational.hpp"
#include "projective.hpp"
#include "recovery.hpp"
#include "lp.hpp"
#include "service_lp.hpp"
#include "polytope.hpp"
#include "region.hpp"
#include "bounds.hpp"
#include "known_codes.hpp"
#include "io.hpp"

#endif
