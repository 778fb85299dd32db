#include "hopi/cli.hpp"

int main(int argc, char** argv) { return hopi::cli::run(argc, argv); }
