#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace strato {

// key = value text config; '#' starts a comment, blank lines ignored.
class ConfigFile {
  public:
    static ConfigFile load(const std::string& path);
    static ConfigFile from_string(const std::string& text);

    bool has(const std::string& key) const { return entries_.count(key) > 0; }
    std::string get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& def) const;
    double get_double(const std::string& key, double def) const;
    int get_int(const std::string& key, int def) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t def) const;
    bool get_bool(const std::string& key, bool def) const;
    std::vector<double> get_list(const std::string& key) const;      // comma separated
    std::vector<std::string> get_strings(const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

  private:
    std::map<std::string, std::string> entries_;
};

}  // namespace strato
