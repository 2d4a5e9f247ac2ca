#pragma once

#include "k4sat/graph.hpp"
#include "k4sat/graph6.hpp"
#include "k4sat/odd_cycle.hpp"
#include "k4sat/saturation.hpp"
#include "k4sat/oracle.hpp"
#include "k4sat/constructions.hpp"
#include "k4sat/enumeration.hpp"
#include "k4sat/serialize.hpp"
