#include "braidkc/cli.hpp"

int main(int argc, char** argv) { return braidkc::run_command(argc, argv); }
