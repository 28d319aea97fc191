#include "darboux/cli.hpp"

int main(int argc, char** argv) { return darboux::cli::run_main(argc, argv); }
