#pragma once

#include "cactus/alpha_spectral.hpp"
#include "cactus/canonical.hpp"
#include "cactus/enumeration.hpp"
#include "cactus/error.hpp"
#include "cactus/extremal.hpp"
#include "cactus/graph.hpp"
#include "cactus/linalg.hpp"
#include "cactus/profile.hpp"
#include "cactus/serialize.hpp"
#include "cactus/transforms.hpp"
#include "cactus/verification.hpp"
