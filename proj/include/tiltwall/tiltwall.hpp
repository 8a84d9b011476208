#ifndef TILTWALL_TILTWALL_HPP
#define TILTWALL_TILTWALL_HPP

#include "tiltwall/exactnum.hpp"
#include "tiltwall/geometry.hpp"
#include "tiltwall/chern.hpp"
#include "tiltwall/stability.hpp"
#include "tiltwall/inequalities.hpp"
#include "tiltwall/walls.hpp"
#include "tiltwall/support.hpp"
#include "tiltwall/svg.hpp"

#endif  // TILTWALL_TILTWALL_HPP
