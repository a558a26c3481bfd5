#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ssmthom {

// Integer partition: weakly decreasing positive parts. The empty partition
// (weight 0) indexes the constant monomial.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const;  // 1-based, 0 past the end

    // Partition with the last (smallest) part removed.
    Partition drop_last() const;

    // Total order: weight-major, then lexicographically descending parts.
    // Matches the enumeration order used for solver unknowns.
    std::strong_ordering operator<=>(const Partition& o) const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    // "211" when all parts fit one digit, "{10,2}" otherwise; "0" for empty.
    std::string str() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of weight <= d, ordered by weight then lexicographically
// descending within each weight. Deterministic.
std::vector<Partition> enumerate_partitions(int d);

// Partitions of weight exactly w, lexicographically descending.
std::vector<Partition> partitions_of_weight(int w);

}  // namespace ssmthom
