#include "pearsonsde/sim.hpp"
