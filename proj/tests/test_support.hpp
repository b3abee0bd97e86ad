#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace binmom::testing {

inline std::string golden_path(const std::string& name)
{
    return std::string(BINMOM_GOLDEN_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Golden rows "order<TAB>formula", keyed by order.
inline std::map<unsigned, std::string> read_golden_rows(const std::string& name)
{
    std::map<unsigned, std::string> rows;
    std::istringstream in(read_file(golden_path(name)));
    std::string line;
    while (std::getline(in, line)) {
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            continue;
        }
        rows[static_cast<unsigned>(std::stoul(line.substr(0, tab)))] = line.substr(tab + 1);
    }
    return rows;
}

} // namespace binmom::testing
