#include "booklab/cli.hpp"

int main(int argc, char** argv) { return booklab::cli::run(argc, argv); }
