#pragma once

#include "polverif/templates/bell_lapadula.hpp"
#include "polverif/templates/domain_hierarchy.hpp"
#include "polverif/templates/security_gateway.hpp"
