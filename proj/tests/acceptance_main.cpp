// Runs the full acceptance suite and reports one line per criterion.
#include <iostream>

#include "dz/selftest.hpp"

int main() { return dz::run_acceptance(std::cout) == 0 ? 0 : 1; }
