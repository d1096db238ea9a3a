// Shared ids, error types and small utilities for the ezcat toolkit.

#ifndef EZCAT_CORE_HPP
#define EZCAT_CORE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ezcat {

/// Index of an object in a category instance's object table.
struct ObjId {
    int v = -1;
    auto operator<=>(const ObjId&) const = default;
};

/// Index of a morphism in a category instance's morphism table.
struct MorId {
    int v = -1;
    auto operator<=>(const MorId&) const = default;
};

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input (files, CLI arguments, mismatched structures). Carries a
/// 1-based line number when the source is a text stream, 0 otherwise.
class InputError : public Error {
  public:
    explicit InputError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// A construction does not fit inside the configured degree bound.
class BoundError : public Error {
  public:
    BoundError(const std::string& msg, int required)
        : Error(msg + " (required degree bound: " + std::to_string(required) + ")"),
          required_(required) {}
    int required_bound() const { return required_; }

  private:
    int required_;
};

/// Homology is only defined over the simplex and box bases.
class UnsupportedBaseError : public Error {
  public:
    using Error::Error;
};

inline void hash_mix(std::size_t& seed, std::size_t value) {
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct IntPairHash {
    std::size_t operator()(const std::pair<int, int>& p) const {
        std::size_t h = std::hash<int>{}(p.first);
        hash_mix(h, std::hash<int>{}(p.second));
        return h;
    }
};

struct IntVecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) hash_mix(h, std::hash<int>{}(x));
        return h;
    }
};

}  // namespace ezcat

#endif  // EZCAT_CORE_HPP
