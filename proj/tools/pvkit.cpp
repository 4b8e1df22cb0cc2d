#include <iostream>

#include "pvkit/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    pvkit::cli::Outcome o = args.empty() || (args.size() == 1 && args[0] == "-")
                                ? pvkit::cli::run_batch(std::cin)
                                : pvkit::cli::run_arguments(args);
    std::cout << o.out;
    std::cerr << o.err;
    return o.exit_code;
}
