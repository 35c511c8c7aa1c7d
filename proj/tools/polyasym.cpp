#include <iostream>

#include <polyasym/cli/app.hpp>

int main(int argc, char **argv)
{
    return polyasym::cli::run_app(argc, argv, std::cout, std::cerr);
}
