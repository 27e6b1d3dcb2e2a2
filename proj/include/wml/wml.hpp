#pragma once

// Everything except the JSON renderings (wml/report.hpp) and the cache.

#include "wml/invariants.hpp"
#include "wml/limits.hpp"
#include "wml/montecarlo.hpp"
#include "wml/parser.hpp"
#include "wml/rational_function.hpp"
#include "wml/stallings.hpp"
#include "wml/surfaces.hpp"
#include "wml/symmetric.hpp"
#include "wml/verify.hpp"
#include "wml/weingarten.hpp"
#include "wml/whitehead.hpp"
#include "wml/words.hpp"
