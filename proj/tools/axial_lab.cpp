#include "axial/cli.hpp"

int main(int argc, char** argv) {
  return axial::run_cli({argv + 1, argv + argc});
}
