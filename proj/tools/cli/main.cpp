#include "commands.hpp"

int main(int argc, char** argv) { return schelling::cli::run(argc, argv); }
