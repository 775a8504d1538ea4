#include "pearsonsde/asymptotics.hpp"
