#include "qss/cli/cli.hpp"

int main(int argc, char** argv) { return qss::cli::dispatch(argc, argv); }
