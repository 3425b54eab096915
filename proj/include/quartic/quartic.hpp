#pragma once

#include "quartic/bigint.hpp"
#include "quartic/counting.hpp"
#include "quartic/cyclotomy.hpp"
#include "quartic/decomposition.hpp"
#include "quartic/error.hpp"
#include "quartic/expsums.hpp"
#include "quartic/finite_field.hpp"
#include "quartic/genfunc.hpp"
#include "quartic/oracle.hpp"
