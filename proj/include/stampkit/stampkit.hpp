#pragma once

#include "stampkit/basis.hpp"
#include "stampkit/checked.hpp"
#include "stampkit/errors.hpp"
#include "stampkit/frobenius.hpp"
#include "stampkit/lpsp.hpp"
#include "stampkit/reduction.hpp"
#include "stampkit/representation.hpp"
#include "stampkit/selmer.hpp"
#include "stampkit/weight_table.hpp"
