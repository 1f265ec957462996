#include "synlab/cli.hpp"

int main(int argc, char** argv) { return synlab::run(argc, argv); }
