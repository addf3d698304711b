#include "runner.hpp"

int main(int argc, char** argv) { return g2l::cli::main(argc, argv); }
