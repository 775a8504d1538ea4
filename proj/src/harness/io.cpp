#include "pearsonsde/harness.hpp"
