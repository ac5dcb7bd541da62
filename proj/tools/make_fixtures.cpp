// Regenerates the bundled synthetic test images under data/.

#include <filesystem>
#include <iostream>
#include <string>

#include "cedct/experiments.hpp"
#include "cedct/image.hpp"

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);

  using namespace cedct;
  save_pgm(render_field_image(crossed_ellipses(), 56, 140), dir + "/ellipses_56x140.pgm");
  save_pgm(render_field_image(tilted_ellipses(), 64, 64), dir + "/ellipses_64x64.pgm");
  save_pgm(render_field_image(tilted_ellipses(0.025), 29, 29), dir + "/ellipses_29x29.pgm");
  std::cout << "fixtures written to " << dir << "\n";
  return 0;
}
