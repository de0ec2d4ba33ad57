#include "qfridge/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return qfridge::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
