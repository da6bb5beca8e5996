#include "scomult/cli.hpp"

int main(int argc, char** argv) { return scomult::cli::main(argc, argv); }
