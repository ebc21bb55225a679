#include <cstdio>

int main() {
  std::puts("su2para_cli: subcommands land here");
  return 0;
}
