#include "pearsonsde/estimators.hpp"
