#include "cli_app.hpp"

int main(int argc, char** argv) { return swarmsim::cli_main(argc, argv); }
