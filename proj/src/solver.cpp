#include "domlab/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace domlab {

namespace {

struct Rules {
    Variant variant;

    int top() const { return max_label(variant); }

    // What a vertex with this label adds to each neighbor's supply.
    int contribution(int label) const
    {
        if (variant == Variant::roman)
            return label == 2 ? 1 : 0;
        return label;
    }

    int max_contribution() const { return contribution(top()); }

    // Supply a vertex with this label needs from its neighbors.
    int requirement(int label) const
    {
        switch (variant) {
        case Variant::dom:
        case Variant::roman: return label == 0 ? 1 : 0;
        case Variant::dom2:
        case Variant::roman2: return label == 0 ? 2 : 0;
        case Variant::brace2: return std::max(0, 2 - label);
        }
        return 0;
    }
};

class Search {
public:
    Search(const Graph& g, Variant variant)
        : rules_{variant}, n_(g.order()), label_(n_, -1), supply_(n_, 0), units_(n_, 0)
    {
        for (Vertex v = 0; v < n_; ++v)
            adj_.push_back(g.mask(v));
        free_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    std::size_t order() const { return n_; }
    int weight() const { return weight_; }
    const Rules& rules() const { return rules_; }

    void assign(Vertex v, int label)
    {
        label_[v] = label;
        free_ &= ~(std::uint64_t{1} << v);
        weight_ += label;
        const int c = rules_.contribution(label);
        if (c != 0)
            for_bits(adj_[v], [&](Vertex u) { supply_[u] += c; });
    }

    void unassign(Vertex v)
    {
        const int label = label_[v];
        const int c = rules_.contribution(label);
        if (c != 0)
            for_bits(adj_[v], [&](Vertex u) { supply_[u] -= c; });
        weight_ -= label;
        free_ |= std::uint64_t{1} << v;
        label_[v] = -1;
    }

    std::optional<int> bound()
    {
        const bool roman = rules_.variant == Variant::roman;
        int total = 0;
        std::uint64_t needy = 0;
        for (Vertex v = 0; v < n_; ++v) {
            const bool assigned = label_[v] >= 0;
            const int required = rules_.requirement(assigned ? label_[v] : 0);
            const int residual = required - supply_[v];
            units_[v] = 0;
            if (residual <= 0)
                continue;
            if (assigned && supply_[v] + rules_.max_contribution() * std::popcount(adj_[v] & free_) < required)
                return std::nullopt;
            units_[v] = roman ? 2 : residual;
            needy |= std::uint64_t{1} << v;
            total += units_[v];
        }
        if (total == 0)
            return 0;
        int best_rate = 0;
        for_bits(free_, [&](Vertex u) {
            const int k = std::popcount(adj_[u] & needy);
            const int self = units_[u];
            int rate = 0;
            switch (rules_.variant) {
            case Variant::brace2: rate = (self > 0 ? 1 : 0) + k; break;
            case Variant::roman: rate = std::max(self, self / 2 + k); break;
            default: rate = self + k; break;
            }
            best_rate = std::max(best_rate, rate);
        });
        if (best_rate == 0)
            return std::nullopt;
        return (total + best_rate - 1) / best_rate;
    }

    Labeling labeling() const
    {
        Labeling f(n_);
        for (Vertex v = 0; v < n_; ++v)
            f.set(v, std::max(0, label_[v]));
        return f;
    }

    template <typename F>
    static void for_bits(std::uint64_t bits, F&& f)
    {
        while (bits != 0) {
            f(static_cast<Vertex>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }

private:
    Rules rules_;
    std::size_t n_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> label_;
    std::vector<int> supply_;
    std::vector<int> units_;
    std::uint64_t free_ = 0;
    int weight_ = 0;
};

// Repeatedly raises the label whose increment most reduces total unmet
// requirement (ties to the lowest id) until the labeling is feasible.
Labeling greedy(const Graph& g, Variant variant)
{
    const Rules rules{variant};
    const std::size_t n = g.order();
    Labeling f(n);
    auto deficiency = [&](const Labeling& h) {
        int total = 0;
        for (Vertex v = 0; v < n; ++v) {
            int supply = 0;
            g.neighbors(v).for_each([&](Vertex u) { supply += rules.contribution(h[u]); });
            total += std::max(0, rules.requirement(h[v]) - supply);
        }
        return total;
    };
    int current = deficiency(f);
    while (current > 0) {
        Vertex pick = n;
        int pick_value = current;
        for (Vertex v = 0; v < n; ++v) {
            if (f[v] == rules.top())
                continue;
            auto trial = f;
            trial.set(v, f[v] + 1);
            const int d = deficiency(trial);
            if (pick == n || d < pick_value) {
                pick = v;
                pick_value = d;
            }
        }
        f.set(pick, f[pick] + 1);
        current = pick_value;
    }
    return f;
}

class BranchAndBound {
public:
    BranchAndBound(const Graph& g, Variant variant) : search_(g, variant)
    {
        order_.resize(g.order());
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    // Minimum weight, starting from a feasible incumbent.
    int optimize(int incumbent)
    {
        best_ = incumbent;
        improve(0);
        return best_;
    }

    // First labeling in id order (labels 0, 1, 2) with weight <= target.
    std::optional<Labeling> first_within(int target)
    {
        target_ = target;
        if (lexicographic(0))
            return search_.labeling();
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void improve(std::size_t pos)
    {
        ++nodes_;
        const auto lb = search_.bound();
        if (!lb || search_.weight() + *lb >= best_)
            return;
        if (pos == order_.size()) {
            best_ = search_.weight();
            return;
        }
        const Vertex v = order_[pos];
        for (int label = 0; label <= search_.rules().top(); ++label) {
            search_.assign(v, label);
            improve(pos + 1);
            search_.unassign(v);
        }
    }

    bool lexicographic(Vertex v)
    {
        ++nodes_;
        const auto lb = search_.bound();
        if (!lb || search_.weight() + *lb > target_)
            return false;
        if (v == search_.order())
            return true;
        for (int label = 0; label <= search_.rules().top(); ++label) {
            search_.assign(v, label);
            if (lexicographic(v + 1))
                return true;
            search_.unassign(v);
        }
        return false;
    }

    Search search_;
    std::vector<Vertex> order_;
    int best_ = 0;
    int target_ = 0;
    std::uint64_t nodes_ = 0;
};

void require_solvable(const Graph& g)
{
    if (g.order() > kMaxSolverOrder)
        throw std::invalid_argument("exact solver supports at most " + std::to_string(kMaxSolverOrder)
                                    + " vertices, got " + std::to_string(g.order()));
}

}  // namespace

SolveResult solve(const Graph& g, Variant variant)
{
    require_solvable(g);
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    if (g.order() == 0) {
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }
    const auto warm = greedy(g, variant);
    if (!check(g, warm, variant))
        throw std::logic_error("greedy warm start produced an invalid certificate");

    BranchAndBound search(g, variant);
    result.value = search.optimize(weight(warm));
    auto certificate = search.first_within(result.value);
    if (!certificate)
        throw std::logic_error("no certificate found at the optimal weight");
    result.certificate = std::move(*certificate);
    result.nodes = search.nodes();
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

std::optional<int> admissible_lower_bound(const Graph& g, Variant variant, std::span<const int> partial)
{
    require_solvable(g);
    if (partial.size() != g.order())
        throw std::invalid_argument("partial assignment length does not match graph order");
    Search search(g, variant);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (partial[v] < -1 || partial[v] > search.rules().top())
            throw std::invalid_argument("partial label outside the variant's alphabet");
        if (partial[v] >= 0)
            search.assign(v, partial[v]);
    }
    return search.bound();
}

}  // namespace domlab
