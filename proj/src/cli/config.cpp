#include "todakdv/cli/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace todakdv::cli {

void RunConfig::set(const std::string& key, const std::string& value)
{
    if (key.empty() || key.find_first_of("=\n") != std::string::npos || value.find('\n') != std::string::npos)
        throw std::invalid_argument("bad config entry '" + key + "'");
    for (auto& [k, v] : entries_)
        if (k == key) {
            v = value;
            return;
        }
    entries_.emplace_back(key, value);
}

std::optional<std::string> RunConfig::get(const std::string& key) const
{
    for (const auto& [k, v] : entries_)
        if (k == key)
            return v;
    return std::nullopt;
}

std::string RunConfig::str() const
{
    std::ostringstream os;
    os << "subcommand=" << subcommand << '\n';
    for (const auto& [k, v] : entries_)
        os << k << '=' << v << '\n';
    return os.str();
}

RunConfig RunConfig::parse(std::string_view text)
{
    RunConfig c;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "subcommand")
            c.subcommand = value;
        else
            c.set(key, value);
    }
    if (c.subcommand.empty())
        throw std::invalid_argument("config has no subcommand");
    return c;
}

RunConfig RunConfig::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void RunConfig::save(const std::string& path) const
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << str();
}

std::vector<std::string> RunConfig::to_args() const
{
    std::vector<std::string> args{subcommand};
    for (const auto& [k, v] : entries_) {
        if (v == "false")
            continue;
        args.push_back("--" + k);
        if (v != "true")
            args.push_back(v);
    }
    return args;
}

}  // namespace todakdv::cli
