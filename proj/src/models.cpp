#include "gsym/models.hpp"
