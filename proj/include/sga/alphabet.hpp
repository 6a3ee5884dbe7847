#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sga {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The set of observables (high-level events). Ids are dense in 1..size().
class Alphabet {
public:
    static constexpr int kMaxSize = 32;

    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
        if (static_cast<int>(names_.size()) > kMaxSize)
            throw Error("alphabet too large (max 32 observables)");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw Error("duplicate observable name: " + names_[i]);
    }

    int size() const { return static_cast<int>(names_.size()); }

    const std::string& name(int id) const {
        if (id < 1 || id > size()) throw Error("observable id out of range");
        return names_[static_cast<std::size_t>(id - 1)];
    }

    int id(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (names_[static_cast<std::size_t>(i)] == name) return i + 1;
        throw Error("unknown observable: " + name);
    }

    bool has(const std::string& name) const {
        for (const auto& n : names_)
            if (n == name) return true;
        return false;
    }

    const std::vector<std::string>& names() const { return names_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
};

// A set of observable ids sensed at one step, stored as a bitmask
// (bit id-1 set iff observable id is present). May be empty.
class Observation {
public:
    Observation() = default;
    explicit Observation(std::uint32_t mask) : mask_(mask) {}
    Observation(std::initializer_list<int> ids) {
        for (int id : ids) add(id);
    }

    void add(int id) { mask_ |= bit(id); }
    bool contains(int id) const { return (mask_ & bit(id)) != 0; }
    bool empty() const { return mask_ == 0; }
    int size() const { return __builtin_popcount(mask_); }
    std::uint32_t mask() const { return mask_; }

    friend bool operator==(const Observation&, const Observation&) = default;
    friend auto operator<=>(const Observation&, const Observation&) = default;

private:
    static std::uint32_t bit(int id) { return 1u << (id - 1); }
    std::uint32_t mask_ = 0;
};

}  // namespace sga
