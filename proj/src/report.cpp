#include "coxtet/catalog.hpp"
