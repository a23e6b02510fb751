#pragma once

#include "archive.hpp"
#include "archivers.hpp"
#include "benchmarks.hpp"
#include "core.hpp"
#include "harness.hpp"
#include "hypervolume.hpp"
#include "mutation.hpp"
#include "oracle.hpp"
#include "paes.hpp"
#include "rng.hpp"
#include "verify.hpp"
