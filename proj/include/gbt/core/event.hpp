#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gbt {

// Finite sample space {0, ..., size-1}; events are subsets of it and the
// power set plays the role of the sigma-algebra.
class SampleSpace {
public:
    static constexpr std::size_t kMaxSize = 64;

    explicit SampleSpace(std::size_t size);

    std::size_t size() const noexcept { return size_; }
    friend bool operator==(SampleSpace, SampleSpace) = default;

private:
    std::size_t size_;
};

class Event {
public:
    Event(SampleSpace space, std::initializer_list<std::size_t> members);
    Event(SampleSpace space, std::span<const std::size_t> members);

    static Event none(SampleSpace space) { return Event(space, std::uint64_t{0}); }
    static Event all(SampleSpace space);
    static Event from_bits(SampleSpace space, std::uint64_t bits);

    SampleSpace space() const noexcept { return space_; }
    std::uint64_t bits() const noexcept { return bits_; }
    std::vector<std::size_t> members() const;
    std::size_t count() const noexcept;
    bool contains(std::size_t element) const;
    bool is_empty() const noexcept { return bits_ == 0; }
    bool is_total() const noexcept;
    bool disjoint_from(const Event& other) const;

    Event complement() const;
    Event operator|(const Event& rhs) const;
    Event operator&(const Event& rhs) const;
    friend bool operator==(const Event&, const Event&) = default;

    // "{0,2}"
    std::string to_string() const;

private:
    Event(SampleSpace space, std::uint64_t bits) : space_(space), bits_(bits) {}
    static std::uint64_t full_mask(SampleSpace space) noexcept;
    void require_same_space(const Event& other, const char* where) const;

    SampleSpace space_;
    std::uint64_t bits_ = 0;
};

// Ordered list of pairwise disjoint, nonempty events covering the space.
class Partition {
public:
    Partition(SampleSpace space, std::vector<Event> blocks);

    // {X}
    static Partition trivial(SampleSpace space);
    // {{0}, {1}, ..., {d-1}}
    static Partition singletons(SampleSpace space);
    // (E, complement of E); E must be neither empty nor total.
    static Partition binary(const Event& event);
    // labels[x] = block index of element x; labels must use 0..k-1 without gaps.
    static Partition from_labels(SampleSpace space, std::span<const std::size_t> labels);

    SampleSpace space() const noexcept { return space_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    const std::vector<Event>& blocks() const noexcept { return blocks_; }
    const Event& operator[](std::size_t i) const { return blocks_.at(i); }
    std::size_t block_of(std::size_t element) const;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    SampleSpace space_;
    std::vector<Event> blocks_;
};

}  // namespace gbt
