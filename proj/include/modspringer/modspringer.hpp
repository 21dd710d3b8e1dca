#ifndef MODSPRINGER_MODSPRINGER_HPP
#define MODSPRINGER_MODSPRINGER_HPP

#include "modspringer/cuspidal.hpp"
#include "modspringer/groupspec.hpp"
#include "modspringer/levi.hpp"
#include "modspringer/orbits.hpp"
#include "modspringer/partitions.hpp"
#include "modspringer/springerdata.hpp"
#include "modspringer/weylrep.hpp"

#endif  // MODSPRINGER_MODSPRINGER_HPP
