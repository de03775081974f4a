#include "ptstab/cli/runners.hpp"

int main(int argc, char** argv) { return ptstab::cli::main_entry(argc, argv); }
