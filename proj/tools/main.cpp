#include "tr2dom/cli.hpp"

#include <iostream>

auto main(int argc, char ** argv) -> int
{
    return tr2dom::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
