#include "kcross/cli.hpp"

int main(int argc, char** argv) { return kcross::run_cli(argc, argv); }
