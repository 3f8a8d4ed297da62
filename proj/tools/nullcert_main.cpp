#include "nullcert/cli.hpp"

int main(int argc, char** argv) {
  return nullcert::run(std::vector<std::string>(argv + 1, argv + argc));
}
