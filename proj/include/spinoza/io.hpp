#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "spinoza/instance.hpp"

namespace spinoza {

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_text_file(const std::filesystem::path& path,
                            std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed while writing " + path.string());
  }
}

inline Instance read_instance_file(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path));
}

/// Canonical serialization plus a trailing newline.
inline void write_instance_file(const std::filesystem::path& path,
                                const Instance& inst) {
  write_text_file(path, serialize_instance(inst) + "\n");
}

}  // namespace spinoza
