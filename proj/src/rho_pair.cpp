#include "rho/rho_pair.hpp"
