#include <iostream>

#include "braident/commands.hpp"

int main(int argc, char **argv)
{
  return braident::cli::main(argc, argv, std::cout, std::cerr);
}
