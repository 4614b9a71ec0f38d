#include "io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace udc::cli {

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return in;
}

template <typename Bytes>
void write_bytes(const std::string& path, const Bytes& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(contents.data()), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in = open_in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::uint8_t> read_binary_file(const std::string& path) {
    std::ifstream in = open_in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& contents) { write_bytes(path, contents); }

void write_file(const std::string& path, const std::vector<std::uint8_t>& contents) { write_bytes(path, contents); }

}  // namespace udc::cli
