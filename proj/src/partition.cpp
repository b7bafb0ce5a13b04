#include "pcc/partition.hpp"

#include <numeric>

namespace pcc {

Partition::Partition(std::vector<std::uint32_t> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0) throw ValidationError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw ValidationError("partition parts must be weakly decreasing");
    }
}

std::uint32_t Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), std::uint32_t(0));
}

Partition Partition::conjugate() const {
    Partition r;
    for (std::uint32_t j = 1; j <= largest(); ++j) {
        std::uint32_t count = 0;
        for (auto p : parts)
            if (p >= j) ++count;
        r.parts.push_back(count);
    }
    return r;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

namespace {

void emit(std::uint32_t n, std::uint32_t max_part, std::vector<std::uint32_t>& prefix,
          std::vector<Partition>& out) {
    if (n == 0) {
        Partition p;
        p.parts = prefix;
        out.push_back(std::move(p));
        return;
    }
    for (std::uint32_t first = 1; first <= std::min(n, max_part); ++first) {
        prefix.push_back(first);
        emit(n - first, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(std::uint32_t n) {
    if (n > 60) throw GuardError("partitions_of: n > 60 exceeds guard");
    std::vector<Partition> out;
    std::vector<std::uint32_t> prefix;
    emit(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

}  // namespace pcc
