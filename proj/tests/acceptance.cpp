#include <iostream>

#include "chordweight/acceptance.hpp"

int main() { return chordweight::acceptance::run_all(std::cout) ? 0 : 1; }
