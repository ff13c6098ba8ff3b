#include <iostream>

#include "copmem/cli.hpp"

int main(int argc, char** argv) {
    copmem::CliConfig cfg;
    if (const auto early = copmem::parse_cli(argc, argv, cfg)) return *early;
    return copmem::run(cfg, std::cout, std::cerr);
}
