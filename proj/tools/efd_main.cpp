#include "efd/cli.hpp"

int main(int argc, char** argv) { return efd::cli::run(argc, argv); }
