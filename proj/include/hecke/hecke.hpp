#pragma once

#include "hecke/arith.hpp"
#include "hecke/lattice_vector.hpp"
#include "hecke/lattice.hpp"
#include "hecke/root_datum.hpp"
#include "hecke/presets.hpp"
#include "hecke/config.hpp"
#include "hecke/torus_algebra.hpp"
#include "hecke/hecke_engine.hpp"
#include "hecke/isocrystal.hpp"
#include "hecke/mv_engine.hpp"
#include "hecke/congruence.hpp"
#include "hecke/cli.hpp"
