#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace g2cayley {

/// Interned symbol. The fixed names used throughout the library
/// (s, t, x, y, b, m, n, r1..r4, l1, l2, a, c, d, T, u, v, w, X)
/// are registered at startup in a fixed order, so canonical forms do not
/// depend on the order in which client code first mentions them.
class Var {
public:
    static Var intern(std::string_view name);
    /// A symbol guaranteed distinct from every previously interned one.
    static Var fresh(std::string_view prefix);
    static bool is_registered(std::string_view name);

    const std::string& name() const;
    std::uint32_t id() const { return id_; }

    friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
    friend bool operator!=(Var a, Var b) { return a.id_ != b.id_; }
    friend bool operator<(Var a, Var b) { return a.id_ < b.id_; }

private:
    friend Var var_by_id(std::uint32_t);
    explicit Var(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

/// Rebuild a handle from a known-valid id (ids are only ever produced by Var).
Var var_by_id(std::uint32_t id);

} // namespace g2cayley
