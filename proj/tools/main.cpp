#include "cli.hpp"

int main(int argc, char** argv) { return fracburgers::cli::run(argc, argv); }
