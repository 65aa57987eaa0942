#ifndef PERIM_PERIM_HPP_
#define PERIM_PERIM_HPP_

#include "perim/combmap.hpp"
#include "perim/complex.hpp"
#include "perim/criteria.hpp"
#include "perim/error.hpp"
#include "perim/input.hpp"
#include "perim/link.hpp"
#include "perim/mapping.hpp"
#include "perim/packet.hpp"
#include "perim/perimeter.hpp"
#include "perim/pieces.hpp"
#include "perim/presentation.hpp"
#include "perim/reduction.hpp"
#include "perim/subgroups.hpp"
#include "perim/word.hpp"

#endif  // PERIM_PERIM_HPP_
