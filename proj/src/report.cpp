#include "rho/report.hpp"
