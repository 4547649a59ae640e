// udg entry point; all behavior lives in the library's run().

#include "udg/cli.hpp"

int main(int argc, char** argv) { return udg::run(argc, argv); }
