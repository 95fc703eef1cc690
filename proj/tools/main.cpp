#include "repsel/cli.hpp"

int main(int argc, char** argv) { return repsel::cli_main(argc, argv); }
