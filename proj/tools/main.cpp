#include "tropigon/cli.hpp"

int main(int argc, char** argv) { return tropigon::run_cli(argc, argv); }
