#include <cstdio>

#include "eea/eea.hpp"

int main() {
  std::puts("eea cli placeholder");
  return 0;
}
