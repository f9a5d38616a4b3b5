#include "gbt/core/event.hpp"

#include "gbt/errors.hpp"

#include <bit>

namespace gbt {

SampleSpace::SampleSpace(std::size_t size) : size_(size) {
    if (size == 0 || size > kMaxSize) {
        throw StructuralError("SampleSpace: size must be in [1, " + std::to_string(kMaxSize) + "], got " +
                              std::to_string(size));
    }
}

std::uint64_t Event::full_mask(SampleSpace space) noexcept {
    return space.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << space.size()) - 1;
}

Event::Event(SampleSpace space, std::initializer_list<std::size_t> members)
    : Event(space, std::span<const std::size_t>(members.begin(), members.size())) {}

Event::Event(SampleSpace space, std::span<const std::size_t> members) : space_(space) {
    for (std::size_t m : members) {
        if (m >= space.size()) {
            throw StructuralError("Event: element " + std::to_string(m) + " outside sample space of size " +
                                  std::to_string(space.size()));
        }
        bits_ |= std::uint64_t{1} << m;
    }
}

Event Event::all(SampleSpace space) { return Event(space, full_mask(space)); }

Event Event::from_bits(SampleSpace space, std::uint64_t bits) {
    if ((bits & ~full_mask(space)) != 0) throw StructuralError("Event::from_bits: bits outside sample space");
    return Event(space, bits);
}

std::vector<std::size_t> Event::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < space_.size(); ++i) {
        if ((bits_ >> i) & 1U) out.push_back(i);
    }
    return out;
}

std::size_t Event::count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

bool Event::contains(std::size_t element) const {
    if (element >= space_.size()) throw StructuralError("Event::contains: element outside sample space");
    return (bits_ >> element) & 1U;
}

bool Event::is_total() const noexcept { return bits_ == full_mask(space_); }

bool Event::disjoint_from(const Event& other) const {
    require_same_space(other, "Event::disjoint_from");
    return (bits_ & other.bits_) == 0;
}

Event Event::complement() const { return Event(space_, ~bits_ & full_mask(space_)); }

Event Event::operator|(const Event& rhs) const {
    require_same_space(rhs, "Event union");
    return Event(space_, bits_ | rhs.bits_);
}

Event Event::operator&(const Event& rhs) const {
    require_same_space(rhs, "Event intersection");
    return Event(space_, bits_ & rhs.bits_);
}

std::string Event::to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t m : members()) {
        if (!first) s += ",";
        s += std::to_string(m);
        first = false;
    }
    return s + "}";
}

void Event::require_same_space(const Event& other, const char* where) const {
    if (!(space_ == other.space_)) throw StructuralError(std::string(where) + ": events over different sample spaces");
}

Partition::Partition(SampleSpace space, std::vector<Event> blocks) : space_(space), blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw StructuralError("Partition: no blocks");
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const Event& b = blocks_[i];
        if (!(b.space() == space)) throw StructuralError("Partition: block over a different sample space");
        if (b.is_empty()) throw StructuralError("Partition: block " + std::to_string(i) + " is empty");
        if ((seen & b.bits()) != 0) throw StructuralError("Partition: block " + std::to_string(i) + " overlaps an earlier block");
        seen |= b.bits();
    }
    if (!Event::from_bits(space, seen).is_total()) throw StructuralError("Partition: blocks do not cover the sample space");
}

Partition Partition::trivial(SampleSpace space) { return Partition(space, {Event::all(space)}); }

Partition Partition::singletons(SampleSpace space) {
    std::vector<Event> blocks;
    blocks.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) blocks.push_back(Event(space, {i}));
    return Partition(space, std::move(blocks));
}

Partition Partition::binary(const Event& event) {
    if (event.is_empty() || event.is_total()) throw StructuralError("Partition::binary: event must be proper and nonempty");
    return Partition(event.space(), {event, event.complement()});
}

Partition Partition::from_labels(SampleSpace space, std::span<const std::size_t> labels) {
    if (labels.size() != space.size()) throw StructuralError("Partition::from_labels: one label per element required");
    std::size_t k = 0;
    for (std::size_t l : labels) k = std::max(k, l + 1);
    std::vector<std::uint64_t> bits(k, 0);
    for (std::size_t x = 0; x < labels.size(); ++x) bits[labels[x]] |= std::uint64_t{1} << x;
    std::vector<Event> blocks;
    blocks.reserve(k);
    for (std::uint64_t b : bits) blocks.push_back(Event::from_bits(space, b));
    return Partition(space, std::move(blocks));
}

std::size_t Partition::block_of(std::size_t element) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].contains(element)) return i;
    }
    throw StructuralError("Partition::block_of: element outside sample space");
}

}  // namespace gbt
