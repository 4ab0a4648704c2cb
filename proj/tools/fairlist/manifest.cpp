#include "manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fairlist/table.hpp"

namespace fairlist::cli {

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path + " for digesting");
    }
    std::uint64_t hash = 14695981039346656037ull;
    char buffer[8192];
    while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buffer[i]);
            hash *= 1099511628211ull;
        }
    }
    return hash;
}

std::string digest_string(std::uint64_t digest) {
    char out[17];
    std::snprintf(out, sizeof out, "%016llx",
                  static_cast<unsigned long long>(digest));
    return out;
}

RunManifest::RunManifest(std::string command, int argc, char** argv)
    : command_(std::move(command)) {
    argv_.reserve(static_cast<std::size_t>(argc));
    for (int i = 0; i < argc; ++i) {
        argv_.emplace_back(argv[i]);
    }
}

void RunManifest::add_config(const std::string& key, const std::string& value) {
    config_.push_back({key, 0, value, 0.0, 0, false});
}

void RunManifest::add_config(const std::string& key, double value) {
    config_.push_back({key, 1, {}, value, 0, false});
}

void RunManifest::add_config(const std::string& key, std::int64_t value) {
    config_.push_back({key, 2, {}, 0.0, value, false});
}

void RunManifest::add_config(const std::string& key, bool value) {
    config_.push_back({key, 3, {}, 0.0, 0, value});
}

void RunManifest::add_input(const std::string& path) {
    inputs_.emplace_back(path, digest_string(fnv1a64_file(path)));
}

void RunManifest::add_output(const std::string& path) {
    outputs_.push_back(path);
}

std::string RunManifest::to_json() const {
    nlohmann::ordered_json doc;
    doc["command"] = command_;
    doc["version"] = kVersion;
    doc["argv"] = argv_;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto& entry : config_) {
        switch (entry.kind) {
            case 0: config[entry.key] = entry.str; break;
            case 1: config[entry.key] = entry.num; break;
            case 2: config[entry.key] = entry.integer; break;
            default: config[entry.key] = entry.flag; break;
        }
    }
    doc["config"] = std::move(config);
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [path, digest] : inputs_) {
        inputs[path] = digest;
    }
    doc["inputs"] = std::move(inputs);
    doc["outputs"] = outputs_;
    doc["wall_time_s"] = wall_time_s_;
    return doc.dump(2) + "\n";
}

void RunManifest::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write manifest to " + path);
    }
    out << to_json();
}

}  // namespace fairlist::cli
