#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace domlab {

using Vertex = std::size_t;

/// A subset of the vertex ids {0, ..., universe-1}, stored as a packed bitset.
///
/// Binary set operations require both operands to share the same universe and
/// throw std::invalid_argument otherwise.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(Vertex v) const noexcept
    {
        return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
    }

    void insert(Vertex v);
    void erase(Vertex v);

    /// Members in increasing order.
    std::vector<Vertex> members() const;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const auto b = static_cast<std::size_t>(std::countr_zero(bits));
                f(static_cast<Vertex>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::size_t word_count() const noexcept { return words_.size(); }
    std::uint64_t word(std::size_t i) const noexcept { return words_[i]; }

    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void require_same_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace domlab
