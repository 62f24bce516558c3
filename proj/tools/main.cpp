#include "trinv/cli.hpp"

int main(int argc, char** argv) { return trinv::cli_main(argc, argv); }
