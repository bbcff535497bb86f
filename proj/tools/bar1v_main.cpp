#include "bar1v/io.hpp"

int main(int argc, char** argv) { return bar1v::cli_main(argc, argv); }
