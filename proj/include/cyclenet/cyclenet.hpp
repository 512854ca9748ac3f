#pragma once

// Umbrella header for the cyclenet library: clique-complex topology of
// undirected networks (Betti numbers, cycle bases, cavities) plus the
// cycle-based node-importance, spreading, hypernetwork and synchronizability
// toolkits built on top of it.

#include "cyclenet/complex.hpp"
#include "cyclenet/cycles.hpp"
#include "cyclenet/dynamics.hpp"
#include "cyclenet/gf2.hpp"
#include "cyclenet/graph.hpp"
#include "cyclenet/homology.hpp"
#include "cyclenet/importance.hpp"
#include "cyclenet/matrix.hpp"
#include "cyclenet/rng.hpp"
#include "cyclenet/spectral.hpp"
