#pragma once

#include "parter/core.hpp"
#include "parter/enumerate.hpp"
#include "parter/errors.hpp"
#include "parter/generate.hpp"
#include "parter/index_set.hpp"
#include "parter/io.hpp"
#include "parter/linalg.hpp"
#include "parter/matrix.hpp"
#include "parter/oracle.hpp"
#include "parter/rational.hpp"
