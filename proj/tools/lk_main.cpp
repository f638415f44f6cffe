#include "lk/cli.hpp"

int main(int argc, char** argv) { return lk::cli::main(argc, argv); }
