#pragma once

#include "surface.hpp"
#include "kernel.hpp"
#include "quadrature.hpp"
#include "solver.hpp"
#include "serialize.hpp"
#include "continuation.hpp"
#include "asymptotics.hpp"
#include "gammafn.hpp"
#include "gbeta.hpp"
#include "mittag.hpp"
#include "rhp.hpp"
#include "verify.hpp"
