#include "kdvspec/cli.hpp"

int main(int argc, char** argv) { return kdvspec::cli::main_entry(argc, argv); }
