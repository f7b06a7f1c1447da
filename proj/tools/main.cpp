#include "ptep_cli.hpp"

int main(int argc, char** argv) { return ptep::cli::run(argc, argv); }
