#include "p4bound/cli.hpp"

int main(int argc, char** argv) { return p4bound::cli::main(argc, argv); }
