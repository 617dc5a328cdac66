#pragma once

#include "kyoung/partition.hpp"
#include "kyoung/kskew.hpp"
#include "kyoung/lattice.hpp"
#include "kyoung/ideal.hpp"
#include "kyoung/qpoly.hpp"
#include "kyoung/rankgen.hpp"
#include "kyoung/io.hpp"
#include "kyoung/verify.hpp"
#include "kyoung/sweep.hpp"
