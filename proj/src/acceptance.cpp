#include "gsym/acceptance.hpp"
