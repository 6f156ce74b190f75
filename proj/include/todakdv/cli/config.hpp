#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace todakdv::cli {

// A subcommand and its parameters as plain key=value lines; the first line is subcommand=<name>.
class RunConfig {
public:
    std::string subcommand;

    void set(const std::string& key, const std::string& value);
    std::optional<std::string> get(const std::string& key) const;
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    std::string str() const;
    static RunConfig parse(std::string_view text);
    static RunConfig load(const std::string& path);
    void save(const std::string& path) const;

    // Command-line form: subcommand, then --key value per entry; "true"/"false" entries are flags.
    std::vector<std::string> to_args() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace todakdv::cli
