#pragma once

#include <filesystem>
#include <string>

namespace nullcert {

// Whole-file read/write; throws Error with the path on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace nullcert
