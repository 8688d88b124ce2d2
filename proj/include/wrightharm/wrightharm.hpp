#pragma once

#include "criteria.hpp"
#include "geometry_oracle.hpp"
#include "harmonic.hpp"
#include "io.hpp"
#include "sources.hpp"
#include "verify.hpp"
#include "special_fn.hpp"
