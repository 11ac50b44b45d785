#include "wqt/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wqt {

namespace fs = std::filesystem;

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) dir_.clear();
    }
}

std::string Cache::resolve_dir(const std::string& flag, bool enabled) {
    if (!enabled) return "";
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("WQT_CACHE_DIR"); env && *env)
        return env;
    return "";
}

std::string Cache::path_for(const std::string& key) const {
    // FNV-1a, stable across runs and platforms.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return (fs::path(dir_) / (os.str() + ".json")).string();
}

std::optional<std::string> Cache::get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    std::string text = body.str();
    // The key is stored on the first line to rule out hash collisions.
    auto nl = text.find('\n');
    if (nl == std::string::npos || text.substr(0, nl) != key)
        return std::nullopt;
    return text.substr(nl + 1);
}

void Cache::put(const std::string& key, const std::string& value) const {
    if (!enabled()) return;
    std::string path = path_for(key);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << key << "\n" << value;
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) fs::remove(tmp, ec);
}

}  // namespace wqt
