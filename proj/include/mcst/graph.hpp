#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcst {

// Error raised by the instance parser; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A subset of players {1, ..., n}. Dense bitset; the root (vertex 0) is
// never a member.
class Coalition {
public:
    Coalition() = default;
    explicit Coalition(int n)
        : n_(n), words_(static_cast<std::size_t>(n / 64 + 1), 0) {}

    static Coalition full(int n) {
        Coalition s(n);
        for (int i = 1; i <= n; ++i) s.add(i);
        return s;
    }

    int capacity() const { return n_; }

    void add(int i) { words_[word(i)] |= bit(i); }
    void remove(int i) { words_[word(i)] &= ~bit(i); }
    bool contains(int i) const { return (words_[word(i)] & bit(i)) != 0; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                out.push_back(static_cast<int>(wi) * 64 + b);
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const Coalition& a, const Coalition& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    static std::size_t word(int i) { return static_cast<std::size_t>(i) / 64; }
    static std::uint64_t bit(int i) { return 1ULL << (i % 64); }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Weight model for random instance generation.
struct WeightModel {
    enum class Kind { Binary, UniformInt };
    Kind kind = Kind::Binary;
    double p = 0.5;                  // Binary: Pr[w = 1]
    std::uint64_t lo = 0, hi = 1;    // UniformInt: inclusive range

    static WeightModel binary(double p) {
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("binary model requires 0 < p < 1");
        WeightModel m;
        m.kind = Kind::Binary;
        m.p = p;
        return m;
    }
    static WeightModel uniform_int(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi)
            throw std::invalid_argument("uniform-int model requires lo <= hi");
        WeightModel m;
        m.kind = Kind::UniformInt;
        m.lo = lo;
        m.hi = hi;
        return m;
    }
};

// Complete graph on {0, 1, ..., n} with non-negative integer edge weights.
// Vertex 0 is the root; players are 1..n. Immutable in practice once built.
class RootedWeightedGraph {
public:
    explicit RootedWeightedGraph(int n)
        : n_(n),
          w_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0) {
        // n = 0 (root only) is allowed internally, e.g. after eliminating
        // every player; instance files require n >= 1.
        if (n < 0) throw std::invalid_argument("player count must be >= 0");
    }

    int players() const { return n_; }

    std::uint64_t weight(int i, int j) const { return w_[idx(i, j)]; }

    void set_weight(int i, int j, std::uint64_t w) {
        if (i == j) throw std::invalid_argument("no self-loops");
        w_[idx(i, j)] = w;
        w_[idx(j, i)] = w;
    }

    bool is_zero_one() const {
        for (int i = 0; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (weight(i, j) > 1) return false;
        return true;
    }

    friend bool operator==(const RootedWeightedGraph& a,
                           const RootedWeightedGraph& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) +
               static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<std::uint64_t> w_;
};

// Distinct positive weight levels gamma_1 < ... < gamma_H of a graph,
// together with the graph they came from. gamma_0 = 0 is implicit.
struct ThresholdDecomposition {
    std::vector<std::uint64_t> levels;
    RootedWeightedGraph source;
};

RootedWeightedGraph parse_instance(const std::string& text);
std::string serialize_instance(const RootedWeightedGraph& g);
RootedWeightedGraph random_instance(int n, const WeightModel& model,
                                    std::uint64_t seed);
ThresholdDecomposition threshold_decompose(const RootedWeightedGraph& g);
RootedWeightedGraph level_graph(const ThresholdDecomposition& d, int h);

}  // namespace mcst
