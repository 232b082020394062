#include "questions/worlds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace questions {

namespace {
constexpr double kSumTolerance = 1e-12;
constexpr double kRenormalizeLimit = 1e-9;
}  // namespace

WorldSet::WorldSet(std::size_t n) : size(n) {
    if (n < 1) throw std::invalid_argument("world set must contain at least one world");
}

WorldSet WorldSet::generated(int n_generators) {
    if (n_generators < 0 || n_generators > 30)
        throw std::invalid_argument("generator count out of range");
    WorldSet ws(std::size_t{1} << n_generators);
    ws.generators = n_generators;
    return ws;
}

Proposition::Proposition(WorldSet ws, const std::vector<bool>& truth) : Proposition(ws) {
    if (truth.size() != ws.size)
        throw std::invalid_argument("truth table length does not match world set size");
    for (std::size_t w = 0; w < truth.size(); ++w)
        if (truth[w]) bits_[w / 64] |= (std::uint64_t{1} << (w % 64));
}

Proposition Proposition::falsum(WorldSet ws) { return Proposition(ws); }

Proposition Proposition::verum(WorldSet ws) {
    Proposition p(ws);
    for (auto& word : p.bits_) word = ~std::uint64_t{0};
    p.clear_padding();
    return p;
}

Proposition Proposition::generator(WorldSet ws, int i) {
    if (!ws.has_generators() || i < 0 || i >= ws.generators)
        throw std::invalid_argument("world set has no generator " + std::to_string(i));
    Proposition p(ws);
    for (std::size_t w = 0; w < ws.size; ++w)
        if ((w >> i) & 1) p.bits_[w / 64] |= (std::uint64_t{1} << (w % 64));
    return p;
}

Proposition Proposition::from_predicate(WorldSet ws,
                                        const std::function<bool(std::size_t)>& pred) {
    Proposition p(ws);
    for (std::size_t w = 0; w < ws.size; ++w)
        if (pred(w)) p.bits_[w / 64] |= (std::uint64_t{1} << (w % 64));
    return p;
}

bool Proposition::value(std::size_t w) const {
    if (w >= ws_.size) throw std::out_of_range("world index out of range");
    return (bits_[w / 64] >> (w % 64)) & 1;
}

std::size_t Proposition::count() const {
    std::size_t c = 0;
    for (auto word : bits_) c += static_cast<std::size_t>(std::popcount(word));
    return c;
}

void Proposition::check_same_space(const Proposition& o) const {
    if (ws_.size != o.ws_.size)
        throw std::invalid_argument("propositions live on different world sets");
}

void Proposition::clear_padding() {
    const std::size_t tail = ws_.size % 64;
    if (tail != 0) bits_.back() &= (std::uint64_t{1} << tail) - 1;
}

Proposition Proposition::operator~() const {
    Proposition p(ws_);
    for (std::size_t i = 0; i < bits_.size(); ++i) p.bits_[i] = ~bits_[i];
    p.clear_padding();
    return p;
}

Proposition Proposition::operator&(const Proposition& o) const {
    check_same_space(o);
    Proposition p(ws_);
    for (std::size_t i = 0; i < bits_.size(); ++i) p.bits_[i] = bits_[i] & o.bits_[i];
    return p;
}

Proposition Proposition::operator|(const Proposition& o) const {
    check_same_space(o);
    Proposition p(ws_);
    for (std::size_t i = 0; i < bits_.size(); ++i) p.bits_[i] = bits_[i] | o.bits_[i];
    return p;
}

Proposition Proposition::operator^(const Proposition& o) const {
    check_same_space(o);
    Proposition p(ws_);
    for (std::size_t i = 0; i < bits_.size(); ++i) p.bits_[i] = bits_[i] ^ o.bits_[i];
    return p;
}

bool Proposition::operator<(const Proposition& o) const {
    if (ws_.size != o.ws_.size) return ws_.size < o.ws_.size;
    return bits_ < o.bits_;
}

Proposition xnor(const Proposition& a, const Proposition& b) { return ~(a ^ b); }

void ConditionalExtension::define(const Proposition& given,
                                  const std::vector<double>& conditional) {
    if (conditional.size() != given.size())
        throw std::invalid_argument("conditional length does not match world set size");
    table_[given.words()] = conditional;
}

const std::vector<double>* ConditionalExtension::find(const Proposition& given) const {
    auto it = table_.find(given.words());
    return it == table_.end() ? nullptr : &it->second;
}

WorldDistribution::WorldDistribution(WorldSet ws, std::vector<double> probs)
    : ws_(ws), p_(std::move(probs)) {
    if (p_.size() != ws_.size)
        throw std::invalid_argument("probability vector length does not match world set size");
    double sum = 0.0;
    for (double& v : p_) {
        if (!(v >= 0.0)) {
            if (!(v >= -kSumTolerance))
                throw std::invalid_argument("negative or non-finite probability entry");
            v = 0.0;
        }
        sum += v;
    }
    const double drift = std::abs(sum - 1.0);
    if (drift > kRenormalizeLimit)
        throw std::invalid_argument("probabilities sum to " + std::to_string(sum));
    if (drift > 0.0) {
        for (auto& v : p_) v /= sum;
    }
}

WorldDistribution WorldDistribution::uniform(WorldSet ws) {
    return WorldDistribution(ws, std::vector<double>(ws.size, 1.0 / static_cast<double>(ws.size)));
}

WorldDistribution WorldDistribution::product(const std::vector<double>& marginals) {
    const int n = static_cast<int>(marginals.size());
    WorldSet ws = WorldSet::generated(n);
    std::vector<double> p(ws.size, 1.0);
    for (std::size_t w = 0; w < ws.size; ++w)
        for (int i = 0; i < n; ++i)
            p[w] *= ((w >> i) & 1) ? marginals[i] : 1.0 - marginals[i];
    return WorldDistribution(ws, std::move(p));
}

WorldDistribution WorldDistribution::with_extension(
    std::shared_ptr<const ConditionalExtension> ext) const {
    WorldDistribution d = *this;
    d.ext_ = std::move(ext);
    return d;
}

double prob(const WorldDistribution& dist, const Proposition& prop) {
    if (dist.size() != prop.size())
        throw std::invalid_argument("distribution and proposition sizes differ");
    double sum = 0.0;
    for (std::size_t w = 0; w < dist.size(); ++w)
        if (prop.value(w)) sum += dist[w];
    return std::min(sum, 1.0);
}

double info(const WorldDistribution& dist, const Proposition& prop) {
    const double p = prob(dist, prop);
    if (p == 0.0) return std::numeric_limits<double>::infinity();
    return -std::log2(p);
}

double mutual_info_pair(const WorldDistribution& dist, const Proposition& a,
                        const Proposition& b) {
    const double pa = prob(dist, a);
    const double pb = prob(dist, b);
    if (pa == 0.0 || pb == 0.0)
        throw std::domain_error("mutual information undefined for zero-probability proposition");
    const double pab = prob(dist, a & b);
    if (pab == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log2(pab / (pa * pb));
}

double balance_sum(const WorldDistribution& dist, const Proposition& a,
                   const Proposition& b) {
    const Proposition na = ~a, nb = ~b;
    const double cells[4] = {prob(dist, a & b), prob(dist, a & nb), prob(dist, na & b),
                             prob(dist, na & nb)};
    for (double c : cells)
        if (c <= 0.0) throw std::domain_error("balance undefined: zero conjunction probability");
    const double pa = cells[0] + cells[1];
    const double pb = cells[0] + cells[2];
    return std::log2(cells[0] / (pa * pb)) + std::log2(cells[1] / (pa * (1.0 - pb))) +
           std::log2(cells[2] / ((1.0 - pa) * pb)) +
           std::log2(cells[3] / ((1.0 - pa) * (1.0 - pb)));
}

}  // namespace questions
