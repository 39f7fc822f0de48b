#include "pcval/cli.hpp"

int main(int argc, char** argv) { return pcval::cli::main_entry(argc, argv); }
