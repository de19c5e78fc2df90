#pragma once

#include "daglim/diagram.hpp"
#include "daglim/error.hpp"
#include "daglim/json_io.hpp"
#include "daglim/laws.hpp"
#include "daglim/limit.hpp"
#include "daglim/matcat.hpp"
#include "daglim/orthonormal.hpp"
#include "daglim/scalars.hpp"
#include "daglim/semiring.hpp"
