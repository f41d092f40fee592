#include <pvi/cli.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    auto o = pvi::run(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << o.out;
    if (!o.err.empty()) {
        std::cerr << o.err << (o.err.back() == '\n' ? "" : "\n");
    }
    return o.exit_code;
}
