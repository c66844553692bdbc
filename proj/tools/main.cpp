#include "artemis/cli.hpp"

int main(int argc, char** argv) { return artemis::cli::run(argc, argv); }
