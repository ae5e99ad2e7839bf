#include "gsym/hodge.hpp"
