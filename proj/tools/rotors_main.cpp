#include "rotors/cli.hpp"

int main(int argc, char** argv) { return rotors::cli::main(argc, argv); }
