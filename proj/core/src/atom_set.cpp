#include "hefcheck/atom_set.hpp"

#include <bit>
#include <cassert>

namespace hefcheck {

namespace {
constexpr int kWordBits = 64;

int word_count(int capacity) { return (capacity + kWordBits - 1) / kWordBits; }
}  // namespace

AtomSet::AtomSet(int capacity) : capacity_(capacity), words_(static_cast<std::size_t>(word_count(capacity)), 0) {
    assert(capacity >= 0);
}

AtomSet AtomSet::with(int capacity, std::initializer_list<int> ids) {
    AtomSet s(capacity);
    for (int id : ids) s.insert(id);
    return s;
}

bool AtomSet::contains(int id) const {
    if (id < 0 || id >= capacity_) return false;
    return (words_[static_cast<std::size_t>(id / kWordBits)] >> (id % kWordBits)) & 1u;
}

void AtomSet::insert(int id) {
    assert(id >= 0 && id < capacity_);
    words_[static_cast<std::size_t>(id / kWordBits)] |= std::uint64_t{1} << (id % kWordBits);
}

void AtomSet::erase(int id) {
    assert(id >= 0 && id < capacity_);
    words_[static_cast<std::size_t>(id / kWordBits)] &= ~(std::uint64_t{1} << (id % kWordBits));
}

void AtomSet::clear() {
    for (auto& w : words_) w = 0;
}

bool AtomSet::empty() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

int AtomSet::count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

int AtomSet::first() const { return next(-1); }

int AtomSet::next(int id) const {
    int start = id + 1;
    if (start >= capacity_) return -1;
    std::size_t wi = static_cast<std::size_t>(start / kWordBits);
    std::uint64_t w = words_[wi] >> (start % kWordBits);
    if (w != 0) return start + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi) {
        if (words_[wi] != 0) return static_cast<int>(wi) * kWordBits + std::countr_zero(words_[wi]);
    }
    return -1;
}

bool AtomSet::intersects(const AtomSet& other) const {
    assert(capacity_ == other.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool AtomSet::subset_of(const AtomSet& other) const {
    assert(capacity_ == other.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

AtomSet& AtomSet::operator|=(const AtomSet& other) {
    assert(capacity_ == other.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

AtomSet& AtomSet::operator&=(const AtomSet& other) {
    assert(capacity_ == other.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

AtomSet& AtomSet::operator-=(const AtomSet& other) {
    assert(capacity_ == other.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

std::vector<int> AtomSet::to_vector() const {
    std::vector<int> out;
    for (int id = first(); id >= 0; id = next(id)) out.push_back(id);
    return out;
}

std::uint64_t AtomSet::to_bits64() const {
    assert(capacity_ <= 64);
    return words_.empty() ? 0 : words_[0];
}

AtomSet AtomSet::from_bits64(int capacity, std::uint64_t bits) {
    assert(capacity <= 64);
    AtomSet s(capacity);
    if (!s.words_.empty()) s.words_[0] = bits;
    return s;
}

int AtomSet::compare_value(const AtomSet& a, const AtomSet& b) {
    assert(a.capacity_ == b.capacity_);
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace hefcheck
