#pragma once

#include "foxcolor/error.hpp"
#include "foxcolor/linalg.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/coloring.hpp"
#include "foxcolor/braid.hpp"
#include "foxcolor/parse.hpp"
#include "foxcolor/families.hpp"
#include "foxcolor/moves.hpp"
