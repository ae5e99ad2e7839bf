#include "gsym/structures.hpp"
