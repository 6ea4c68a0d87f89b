#include "qdc/run_config.hpp"

int main(int argc, char** argv) { return qdc::cli::run(argc, argv); }
