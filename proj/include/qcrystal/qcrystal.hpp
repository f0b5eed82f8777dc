#pragma once

#include "qcrystal/crystal.hpp"
#include "qcrystal/decomp.hpp"
#include "qcrystal/format.hpp"
#include "qcrystal/identities.hpp"
#include "qcrystal/partition.hpp"
#include "qcrystal/qseries.hpp"
#include "qcrystal/suites.hpp"
#include "qcrystal/theta.hpp"
#include "qcrystal/weight.hpp"
