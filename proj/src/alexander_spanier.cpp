#include "rho/alexander_spanier.hpp"
