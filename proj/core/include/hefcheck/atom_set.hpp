#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hefcheck {

// Fixed-capacity bit set over dense atom ids. The capacity is decided when
// the owning Program is built; binary operations require both operands to
// come from the same program (equal capacity).
class AtomSet {
  public:
    AtomSet() = default;
    explicit AtomSet(int capacity);
    static AtomSet with(int capacity, std::initializer_list<int> ids);

    int capacity() const { return capacity_; }
    bool contains(int id) const;
    void insert(int id);
    void erase(int id);
    void clear();

    bool empty() const;
    int count() const;
    int first() const;       // smallest member, -1 when empty
    int next(int id) const;  // smallest member greater than id, -1 when exhausted

    bool intersects(const AtomSet& other) const;
    bool subset_of(const AtomSet& other) const;

    AtomSet& operator|=(const AtomSet& other);
    AtomSet& operator&=(const AtomSet& other);
    AtomSet& operator-=(const AtomSet& other);
    friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
    friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
    friend AtomSet operator-(AtomSet a, const AtomSet& b) { return a -= b; }
    bool operator==(const AtomSet& other) const = default;

    std::vector<int> to_vector() const;

    // Capacity <= 64 only; used by the exhaustive enumeration code paths.
    std::uint64_t to_bits64() const;
    static AtomSet from_bits64(int capacity, std::uint64_t bits);

    // Compares the numeric value of the membership masks (ignores
    // cardinality); defines the canonical tie-break order of subsets.
    static int compare_value(const AtomSet& a, const AtomSet& b);

  private:
    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hefcheck
