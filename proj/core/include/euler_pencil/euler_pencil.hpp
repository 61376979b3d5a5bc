#pragma once

#include "euler_pencil/catalogue.hpp"
#include "euler_pencil/continuum.hpp"
#include "euler_pencil/curves.hpp"
#include "euler_pencil/error.hpp"
#include "euler_pencil/laurent.hpp"
#include "euler_pencil/matching.hpp"
#include "euler_pencil/matrix2.hpp"
#include "euler_pencil/pencil.hpp"
#include "euler_pencil/poly.hpp"
#include "euler_pencil/quadext.hpp"
#include "euler_pencil/rational.hpp"
#include "euler_pencil/stats.hpp"
