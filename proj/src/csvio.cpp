#include "gasfold/csvio.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gasfold::cli {

std::string fmt_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_text(const std::string& header,
                     const std::vector<std::vector<std::string>>& rows) {
    std::string out = header;
    out.push_back('\n');
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back(',');
            out += row[i];
        }
        out.push_back('\n');
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file '" + path + "'");
    out << content;
}

} // namespace gasfold::cli
