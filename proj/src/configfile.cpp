#include "strato/configfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace strato {

namespace {
std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}
}  // namespace

ConfigFile ConfigFile::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return from_string(ss.str());
}

ConfigFile ConfigFile::from_string(const std::string& text) {
    ConfigFile cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw std::runtime_error("config line " + std::to_string(lineno) +
                                                  ": empty key");
        cfg.entries_[key] = val;
    }
    return cfg;
}

std::string ConfigFile::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw std::out_of_range("missing config key: " + key);
    return it->second;
}

std::string ConfigFile::get_or(const std::string& key, const std::string& def) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? def : it->second;
}

double ConfigFile::get_double(const std::string& key, double def) const {
    return has(key) ? std::stod(get(key)) : def;
}

int ConfigFile::get_int(const std::string& key, int def) const {
    return has(key) ? std::stoi(get(key)) : def;
}

std::uint64_t ConfigFile::get_u64(const std::string& key, std::uint64_t def) const {
    return has(key) ? std::stoull(get(key)) : def;
}

bool ConfigFile::get_bool(const std::string& key, bool def) const {
    if (!has(key)) return def;
    std::string v = get(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::runtime_error("config key " + key + ": expected boolean, got " + v);
}

std::vector<double> ConfigFile::get_list(const std::string& key) const {
    std::vector<double> out;
    for (const std::string& tok : get_strings(key)) out.push_back(std::stod(tok));
    return out;
}

std::vector<std::string> ConfigFile::get_strings(const std::string& key) const {
    std::vector<std::string> out;
    std::string v = get(key);
    std::istringstream is(v);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

}  // namespace strato
