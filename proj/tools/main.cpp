#include "cli.hpp"

int main(int argc, char** argv) { return chordweight::cli::run(argc, argv); }
