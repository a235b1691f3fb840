#include "walshsum/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
	return walshsum::cli::run(argc, argv, std::cout, std::cerr);
}
