#include "gsym/liegroup.hpp"
