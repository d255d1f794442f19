#include "domlab/vertex_set.hpp"

#include <stdexcept>
#include <string>

namespace domlab {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w)
        s.words_[w] = ~std::uint64_t{0};
    if (universe % 64 != 0)
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

std::size_t VertexSet::size() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const noexcept
{
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

void VertexSet::insert(Vertex v)
{
    if (v >= universe_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v)
{
    if (v >= universe_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0)
            return false;
    return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= ~other.words_[w];
    return *this;
}

void VertexSet::require_same_universe(const VertexSet& other) const
{
    if (universe_ != other.universe_)
        throw std::invalid_argument("vertex sets over different universes (" + std::to_string(universe_) + " vs "
                                    + std::to_string(other.universe_) + ")");
}

}  // namespace domlab
