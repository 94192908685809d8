#include "cyclospec/cli.hpp"

int main(int argc, char** argv) { return cyclospec::cli::run(argc, argv); }
