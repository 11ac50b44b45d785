#pragma once

#include <optional>
#include <string>

namespace wqt {

/// Content-addressed result cache: one file per key under a directory,
/// written atomically (temp file + rename).  An empty directory disables
/// caching.  Keys are arbitrary strings (claim id, case, indices, orders,
/// engine version); the file name is a stable hash of the key.
class Cache {
public:
    explicit Cache(std::string dir);

    /// Directory precedence: explicit flag, then $WQT_CACHE_DIR, then off.
    static std::string resolve_dir(const std::string& flag, bool enabled);

    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;

private:
    std::string path_for(const std::string& key) const;
    std::string dir_;
};

}  // namespace wqt
