#ifndef QUESTIONS_WORLDS_HPP
#define QUESTIONS_WORLDS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

/// Finite sample spaces, propositions as truth tables over worlds, and
/// probability distributions together with the elementary information
/// quantities defined on them.
namespace questions {

/// A finite set of elementary outcomes. When the worlds are the 2^N
/// assignments of N independent generator propositions, `generators`
/// records N; otherwise it is -1 and the set is unstructured.
struct WorldSet {
    std::size_t size = 0;
    int generators = -1;

    WorldSet() = default;
    explicit WorldSet(std::size_t n);
    static WorldSet generated(int n_generators);

    bool has_generators() const { return generators >= 0; }
    friend bool operator==(const WorldSet&, const WorldSet&) = default;
};

/// A proposition over a world set, stored as a truth-table bit vector:
/// bit w is 1 iff the proposition holds in world w.
class Proposition {
  public:
    Proposition(WorldSet ws, const std::vector<bool>& truth);

    static Proposition falsum(WorldSet ws);
    static Proposition verum(WorldSet ws);
    /// Truth table of generator proposition i: true in world w iff bit i of w is set.
    static Proposition generator(WorldSet ws, int i);
    static Proposition from_predicate(WorldSet ws, const std::function<bool(std::size_t)>& pred);

    const WorldSet& world_set() const { return ws_; }
    std::size_t size() const { return ws_.size; }
    bool value(std::size_t w) const;
    std::size_t count() const;
    bool is_false() const { return count() == 0; }
    bool is_true() const { return count() == ws_.size; }

    Proposition operator~() const;
    Proposition operator&(const Proposition& o) const;
    Proposition operator|(const Proposition& o) const;
    Proposition operator^(const Proposition& o) const;

    const std::vector<std::uint64_t>& words() const { return bits_; }

    friend bool operator==(const Proposition& a, const Proposition& b) {
        return a.ws_.size == b.ws_.size && a.bits_ == b.bits_;
    }
    bool operator<(const Proposition& o) const;

  private:
    Proposition(WorldSet ws) : ws_(ws), bits_((ws.size + 63) / 64, 0) {}
    void check_same_space(const Proposition& o) const;
    void clear_padding();

    WorldSet ws_;
    std::vector<std::uint64_t> bits_;
};

Proposition xnor(const Proposition& a, const Proposition& b);

/// Injectable table of conditional distributions for propositions with zero
/// probability. Keyed by the proposition's truth table.
class ConditionalExtension {
  public:
    void define(const Proposition& given, const std::vector<double>& conditional);
    const std::vector<double>* find(const Proposition& given) const;

  private:
    std::map<std::vector<std::uint64_t>, std::vector<double>> table_;
};

/// A probability vector over a finite world set. Values are immutable after
/// construction; constructors renormalize drift up to 1e-9 and reject more.
class WorldDistribution {
  public:
    WorldDistribution(WorldSet ws, std::vector<double> probs);

    static WorldDistribution uniform(WorldSet ws);
    /// Product distribution over N generators with P(generator i) = marginals[i].
    static WorldDistribution product(const std::vector<double>& marginals);

    const WorldSet& world_set() const { return ws_; }
    std::size_t size() const { return ws_.size; }
    double operator[](std::size_t w) const { return p_[w]; }
    const std::vector<double>& probs() const { return p_; }

    WorldDistribution with_extension(std::shared_ptr<const ConditionalExtension> ext) const;
    const ConditionalExtension* extension() const { return ext_.get(); }
    std::shared_ptr<const ConditionalExtension> extension_ptr() const { return ext_; }

  private:
    WorldSet ws_;
    std::vector<double> p_;
    std::shared_ptr<const ConditionalExtension> ext_;
};

/// P(prop) under dist.
double prob(const WorldDistribution& dist, const Proposition& prop);

/// i(prop) = -log2 P(prop), in bits; +infinity when P(prop) = 0.
double info(const WorldDistribution& dist, const Proposition& prop);

/// i(A,B) = log2(P(AB) / (P(A) P(B))), in bits. -infinity when P(AB) = 0 with
/// both marginals positive. Throws when P(A) = 0 or P(B) = 0.
double mutual_info_pair(const WorldDistribution& dist, const Proposition& a,
                        const Proposition& b);

/// i(A,B) + i(A,!B) + i(!A,B) + i(!A,!B), in bits. All four conjunction cells
/// must have strictly positive probability.
double balance_sum(const WorldDistribution& dist, const Proposition& a,
                   const Proposition& b);

}  // namespace questions

#endif
