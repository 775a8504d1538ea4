#include "pearsonsde/optimizer.hpp"
