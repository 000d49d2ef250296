#include "hoct/io.hpp"

#include <fstream>

#include "hoct/errors.hpp"

namespace hoct {

Bytes read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for reading");
    f.seekg(0, std::ios::end);
    const std::streamoff size = f.tellg();
    if (size < 0) throw IoError("cannot determine size of " + path);
    f.seekg(0, std::ios::beg);
    Bytes b(static_cast<std::size_t>(size));
    if (size > 0) {
        f.read(reinterpret_cast<char*>(b.data()), size);
    }
    if (!f) throw IoError("read failed on " + path);
    return b;
}

void write_file(const std::string& path, const Bytes& data) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path + " for writing");
    if (!data.empty()) {
        f.write(reinterpret_cast<const char*>(data.data()),
                static_cast<std::streamsize>(data.size()));
    }
    f.flush();
    if (!f) throw IoError("write failed on " + path);
}

}  // namespace hoct
