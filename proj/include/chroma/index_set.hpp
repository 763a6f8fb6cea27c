#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chroma {

/// Fixed-universe bitset over 0..size()-1. The tag keeps vertex sets and edge
/// sets from being mixed up.
template <class Tag>
class IndexSet
{
  public:
    IndexSet() = default;
    explicit IndexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    [[nodiscard]] std::size_t universe() const noexcept { return universe_; }

    void insert(std::size_t i)
    {
        check(i);
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }

    void erase(std::size_t i)
    {
        check(i);
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }

    [[nodiscard]] bool contains(std::size_t i) const
    {
        check(i);
        return (words_[i / 64] >> (i % 64)) & 1U;
    }

    [[nodiscard]] std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] bool empty() const noexcept { return count() == 0; }

    [[nodiscard]] bool is_subset_of(const IndexSet & other) const
    {
        if (other.universe_ != universe_)
            return false;
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    [[nodiscard]] std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    friend bool operator==(const IndexSet &, const IndexSet &) = default;

  private:
    void check(std::size_t i) const
    {
        if (i >= universe_)
            throw std::out_of_range("index set member out of range");
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexTag;
struct EdgeTag;
using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;

} // namespace chroma
