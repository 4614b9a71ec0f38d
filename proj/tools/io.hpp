#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace udc::cli {

/// File system failure (exit code 4).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
std::vector<std::uint8_t> read_binary_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
void write_file(const std::string& path, const std::vector<std::uint8_t>& contents);

}  // namespace udc::cli
