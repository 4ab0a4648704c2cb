#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fairlist::cli {

inline constexpr const char* kVersion = "0.1.0";

// FNV-1a over the raw bytes of a file, rendered as 16 hex digits.  Cheap,
// stable across platforms, and good enough to tell "same input" from "edited
// input" in a run manifest.  Throws InputError when the file cannot be read.
std::uint64_t fnv1a64_file(const std::string& path);
std::string digest_string(std::uint64_t digest);

// Every subcommand drops a manifest next to its outputs so a run can be
// reproduced or at least explained later: the exact command line, resolved
// configuration, input digests, and the files written.
class RunManifest {
public:
    RunManifest(std::string command, int argc, char** argv);

    void add_config(const std::string& key, const std::string& value);
    void add_config(const std::string& key, double value);
    void add_config(const std::string& key, std::int64_t value);
    void add_config(const std::string& key, bool value);
    void add_input(const std::string& path);
    void add_output(const std::string& path);
    void set_wall_time(double seconds) { wall_time_s_ = seconds; }

    std::string to_json() const;
    void write(const std::string& path) const;

private:
    struct ConfigEntry {
        std::string key;
        // Tagged union-lite; json.hpp handles the typing at render time.
        int kind = 0;  // 0 string, 1 double, 2 int, 3 bool
        std::string str;
        double num = 0.0;
        std::int64_t integer = 0;
        bool flag = false;
    };

    std::string command_;
    std::vector<std::string> argv_;
    std::vector<ConfigEntry> config_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::vector<std::string> outputs_;
    double wall_time_s_ = 0.0;
};

}  // namespace fairlist::cli
