#include "qkz/cli.hpp"

int main(int argc, char** argv) { return qkz::cli::main_entry(argc, argv); }
