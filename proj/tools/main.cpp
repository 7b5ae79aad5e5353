#include "perfgrp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return perfgrp::cli_main(argc, argv, std::cout, std::cerr); }
