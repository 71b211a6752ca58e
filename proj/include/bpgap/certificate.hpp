#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bpgap {

// Machine-readable verdict of a checked claim. Parameters and witness entries
// keep insertion order so that serialized certificates are byte-stable.
struct Certificate {
    using Entries = std::vector<std::pair<std::string, std::string>>;

    std::string claim;
    Entries parameters;
    bool pass = false;
    Entries witness;

    Certificate& param(std::string key, std::string value) {
        parameters.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    template <typename T>
    Certificate& param(std::string key, const T& value) {
        return param(std::move(key), std::to_string(value));
    }
    Certificate& note(std::string key, std::string value) {
        witness.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    template <typename T>
    Certificate& note(std::string key, const T& value) {
        return note(std::move(key), std::to_string(value));
    }

    // Fail verdicts always carry a witness.
    bool well_formed() const { return pass || !witness.empty(); }

    const std::string* find_witness(const std::string& key) const {
        for (const auto& [k, v] : witness)
            if (k == key) return &v;
        return nullptr;
    }
    const std::string* find_param(const std::string& key) const {
        for (const auto& [k, v] : parameters)
            if (k == key) return &v;
        return nullptr;
    }

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

} // namespace bpgap
