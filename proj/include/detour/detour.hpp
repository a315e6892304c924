#pragma once

// Umbrella header: exact counting, enumeration and catalog-scale search for
// detours (longest paths) in small undirected graphs.

#include "detour/chords.hpp"
#include "detour/connectivity.hpp"
#include "detour/dfs.hpp"
#include "detour/dp.hpp"
#include "detour/engine.hpp"
#include "detour/errors.hpp"
#include "detour/families.hpp"
#include "detour/filter.hpp"
#include "detour/generator.hpp"
#include "detour/graph.hpp"
#include "detour/graph6.hpp"
#include "detour/path.hpp"
#include "detour/psi.hpp"
#include "detour/record.hpp"
#include "detour/report.hpp"
#include "detour/scan.hpp"
#include "detour/tabulate.hpp"
#include "detour/verify.hpp"
