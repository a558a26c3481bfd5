#include "ssmthom/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace ssmthom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition part must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1 || i > size()) return 0;
    return parts_[i - 1];
}

Partition Partition::drop_last() const {
    if (parts_.empty()) throw std::logic_error("drop_last on empty partition");
    return Partition(std::vector<int>(parts_.begin(), parts_.end() - 1));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (weight_ != o.weight_) return weight_ <=> o.weight_;
    // Lexicographically larger parts come first within a weight.
    size_t n = std::min(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < n; ++i)
        if (parts_[i] != o.parts_[i]) return o.parts_[i] <=> parts_[i];
    return o.parts_.size() <=> parts_.size();
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    bool single_digit = parts_.front() <= 9;
    std::string out;
    if (single_digit) {
        for (int p : parts_) out += std::to_string(p);
    } else {
        out = "{";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        out += "}";
    }
    return out;
}

namespace {

void gen_rec(int remaining, int max_part, std::vector<int>& acc,
             std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of_weight(int w) {
    if (w < 0) throw std::invalid_argument("negative partition weight");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_rec(w, w, acc, out);
    if (w == 0) out = {Partition{}};
    return out;
}

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw std::invalid_argument("negative degree bound");
    std::vector<Partition> out;
    for (int w = 0; w <= d; ++w) {
        auto level = partitions_of_weight(w);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace ssmthom
