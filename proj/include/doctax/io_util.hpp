#ifndef DOCTAX_IO_UTIL_HPP
#define DOCTAX_IO_UTIL_HPP

#include <filesystem>
#include <string>

namespace doctax {

// Throws InputError with kind "IoError" on failure.
std::string read_file(const std::filesystem::path& path);

// Writes via temp file + rename so partially written outputs never appear.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace doctax

#endif
