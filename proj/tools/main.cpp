// main.cpp: qbm_sbs command-line entry point

#include "qbm/cli.hpp"

int main(int argc, char** argv) { return qbm::run_cli(argc, argv); }
