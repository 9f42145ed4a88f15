#include "g2cayley/var.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace g2cayley {
namespace {

struct Registry {
    std::mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> index;
    std::uint64_t fresh_counter = 0;

    Registry() {
        static const char* fixed[] = {"s", "t",  "x",  "y",  "b",  "m",  "n",
                                      "r1", "r2", "r3", "r4", "l1", "l2", "a",
                                      "c",  "d",  "T",  "u",  "v",  "w",  "X"};
        for (const char* f : fixed) {
            index.emplace(f, static_cast<std::uint32_t>(names.size()));
            names.emplace_back(f);
        }
    }

    std::uint32_t intern(std::string_view name) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = index.find(std::string(name));
        if (it != index.end()) return it->second;
        auto id = static_cast<std::uint32_t>(names.size());
        names.emplace_back(name);
        index.emplace(names.back(), id);
        return id;
    }

    std::uint32_t fresh(std::string_view prefix) {
        std::lock_guard<std::mutex> lock(mu);
        std::string candidate;
        do {
            candidate = std::string(prefix) + "#" + std::to_string(fresh_counter++);
        } while (index.count(candidate) != 0);
        auto id = static_cast<std::uint32_t>(names.size());
        names.push_back(candidate);
        index.emplace(names.back(), id);
        return id;
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

Var Var::intern(std::string_view name) {
    if (name.empty()) throw std::invalid_argument("Var: empty name");
    return Var(registry().intern(name));
}

Var Var::fresh(std::string_view prefix) { return Var(registry().fresh(prefix)); }

bool Var::is_registered(std::string_view name) {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    return r.index.count(std::string(name)) != 0;
}

const std::string& Var::name() const {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    return r.names.at(id_);
}

Var var_by_id(std::uint32_t id) {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    if (id >= r.names.size()) throw std::invalid_argument("var_by_id: unknown id");
    return Var(id);
}

} // namespace g2cayley
