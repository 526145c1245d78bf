#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fiatsim::testing {

/// Fresh, empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string &name) {
  const auto dir = std::filesystem::temp_directory_path() / ("fiatsim_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::filesystem::path write_config(const std::filesystem::path &dir,
                                          const std::string &text) {
  const auto path = dir / "fiatsim.cfg";
  std::ofstream(path) << text;
  return path;
}

} // namespace fiatsim::testing
