#include "gsym/extension.hpp"
