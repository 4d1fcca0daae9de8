#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "magmakit/io.hpp"

inline std::string data_path(const std::string& name) { return std::string(MK_TEST_DATA) + "/" + name; }

// every .cay fixture whose file name starts with prefix
inline std::vector<std::string> fixtures(const std::string& prefix) {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(MK_TEST_DATA)) {
        auto f = e.path().filename().string();
        if (f.rfind(prefix, 0) == 0 && e.path().extension() == ".cay") out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}
