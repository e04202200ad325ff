#pragma once

#include "loopkit/constructions.hpp"
#include "loopkit/holomorph.hpp"
#include "loopkit/identities.hpp"
#include "loopkit/io.hpp"
#include "loopkit/perm.hpp"
#include "loopkit/regularity.hpp"
#include "loopkit/table.hpp"
#include "loopkit/theorems.hpp"
#include "loopkit/version.hpp"
