#include "hcv/cli.hpp"

int main(int argc, char** argv) { return hcv::cli_main(argc, argv); }
