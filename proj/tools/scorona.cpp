#include "cli.hpp"

int main(int argc, char** argv) { return scorona::cli::run(argc, argv); }
