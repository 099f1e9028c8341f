#pragma once

// Umbrella header.

#include "qgt/analysis.hpp"
#include "qgt/bos.hpp"
#include "qgt/errors.hpp"
#include "qgt/game.hpp"
#include "qgt/linalg.hpp"
#include "qgt/numeric.hpp"
#include "qgt/quantum.hpp"
#include "qgt/report.hpp"
#include "qgt/scenario.hpp"
#include "qgt/verify.hpp"
