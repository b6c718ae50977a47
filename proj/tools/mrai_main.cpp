#include "mrai/cli.hpp"

int main(int argc, char** argv) { return mrai::cli_main(argc, argv); }
