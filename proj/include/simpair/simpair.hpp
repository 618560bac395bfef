#pragma once

#include "simpair/cardinal.hpp"
#include "simpair/construct.hpp"
#include "simpair/core.hpp"
#include "simpair/decide.hpp"
#include "simpair/error.hpp"
#include "simpair/io.hpp"
#include "simpair/oracle.hpp"
#include "simpair/shapes.hpp"
#include "simpair/wpo.hpp"
