#pragma once

#include "htrig/bsplines.hpp"
#include "htrig/checks.hpp"
#include "htrig/classical.hpp"
#include "htrig/errors.hpp"
#include "htrig/gdd.hpp"
#include "htrig/hcalc.hpp"
#include "htrig/identities.hpp"
