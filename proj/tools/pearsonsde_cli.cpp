#include "pearsonsde/harness.hpp"
int main(int argc, char** argv) { return pearsonsde::harness::run_cli(argc, argv); }
