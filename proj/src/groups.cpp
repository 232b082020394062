#include "questions/groups.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

namespace questions {

PureQuestion::PureQuestion(const Proposition& member)
    : canon_(member.value(0) ? ~member : member) {}

PureQuestion PureQuestion::identity(WorldSet ws) {
    return PureQuestion(Proposition::falsum(ws));
}

PureQuestion star(const PureQuestion& p, const PureQuestion& q) {
    return PureQuestion(p.canonical() ^ q.canonical());
}

AskableQuestion star(const AskableQuestion& p, const AskableQuestion& q) {
    return AskableQuestion(xnor(p.asked(), q.asked()));
}

Proposition answer(const AskableQuestion& q, Answer ans) {
    return ans == Answer::Yes ? q.asked() : ~q.asked();
}

Subject::Subject(int n_generators, std::uint32_t mask) : n_(n_generators), mask_(mask) {
    if (n_ < 0 || n_ > 30) throw std::invalid_argument("generator count out of range");
    if (n_ < 32 && (mask_ >> n_) != 0)
        throw std::invalid_argument("subject mask refers to generators beyond N");
}

int Subject::size() const { return std::popcount(mask_); }

Proposition Subject::conjunction(WorldSet ws) const {
    if (!ws.has_generators() || ws.generators != n_)
        throw std::invalid_argument("world set does not match subject's generator count");
    Proposition p = Proposition::verum(ws);
    for (int i = 0; i < n_; ++i)
        if (contains(i)) p = p & Proposition::generator(ws, i);
    return p;
}

Subject circ(const Subject& s, const Subject& t) {
    if (s.generator_count() != t.generator_count())
        throw std::invalid_argument("subjects over different generator counts");
    return Subject(s.generator_count(), s.mask() ^ t.mask());
}

namespace {

// In-place Moebius transform over GF(2): coef[m] = xor of f(x) for x subset of m.
void moebius(std::vector<std::uint8_t>& coef, int n) {
    for (int i = 0; i < n; ++i)
        for (std::size_t x = 0; x < coef.size(); ++x)
            if ((x >> i) & 1) coef[x] ^= coef[x ^ (std::size_t{1} << i)];
}

int require_generated(const Proposition& prop) {
    const WorldSet& ws = prop.world_set();
    if (!ws.has_generators())
        throw std::invalid_argument("operation requires a generated world set");
    return ws.generators;
}

}  // namespace

int AnfForm::degree() const {
    int d = 0;
    for (auto m : monomials) d = std::max(d, std::popcount(m));
    return d;
}

AnfForm AnfForm::dual() const {
    AnfForm f = *this;
    f.constant = !f.constant;
    f.connective = connective == Connective::Xor ? Connective::Xnor : Connective::Xor;
    return f;
}

bool AnfForm::evaluate(std::uint32_t assignment) const {
    bool v = constant;
    for (auto m : monomials)
        if ((assignment & m) == m) v = !v;
    return connective == Connective::Xor ? v : !v;
}

Proposition AnfForm::to_proposition() const {
    WorldSet ws = WorldSet::generated(n_generators);
    std::vector<bool> truth(ws.size);
    for (std::size_t w = 0; w < ws.size; ++w)
        truth[w] = evaluate(static_cast<std::uint32_t>(w));
    return Proposition(ws, truth);
}

AnfForm anf(const Proposition& prop) {
    const int n = require_generated(prop);
    std::vector<std::uint8_t> coef(prop.size());
    for (std::size_t w = 0; w < prop.size(); ++w) coef[w] = prop.value(w) ? 1 : 0;
    moebius(coef, n);
    AnfForm f;
    f.n_generators = n;
    f.constant = coef[0] != 0;
    for (std::size_t m = 1; m < coef.size(); ++m)
        if (coef[m]) f.monomials.push_back(static_cast<std::uint32_t>(m));
    return f;
}

int rank(const PureQuestion& q) { return anf(q.canonical()).degree(); }

std::vector<Subject> quotient_subject(const PureQuestion& q, int m) {
    if (m < 1) throw std::invalid_argument("quotient rank must be at least 1");
    const AnfForm f = anf(q.canonical());
    if (f.degree() != m)
        throw std::invalid_argument("question has rank " + std::to_string(f.degree()) +
                                    ", not " + std::to_string(m));
    std::vector<Subject> out;
    for (auto mono : f.monomials)
        if (std::popcount(mono) == m) out.emplace_back(f.n_generators, mono);
    return out;
}

SubjectPredicateAnswer subject_predicate_answer(const Proposition& prop) {
    const AnfForm f = anf(prop);
    SubjectPredicateAnswer out;
    out.answer = f.constant;
    out.predicate.n_generators = f.n_generators;
    const int top = f.degree();
    for (auto mono : f.monomials) {
        if (std::popcount(mono) == top && top > 0)
            out.subject.emplace_back(f.n_generators, mono);
        else
            out.predicate.monomials.push_back(mono);
    }
    return out;
}

GroupCensus group_census(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("enumeration too large: N must be 1..4");
    const int worlds = 1 << n;
    const std::uint32_t full = (std::uint32_t{1} << worlds) - 1;

    // Q(N) = all truth tables that are false in world 0.
    std::vector<std::uint32_t> elems;
    for (std::uint32_t t = 0; t <= full; t += 2) elems.push_back(t);

    GroupCensus census;
    census.n = n;
    census.q_size = elems.size();
    census.generator_count = (std::uint64_t{1} << n) - 1;

    // Rank via ANF degree of each element.
    std::vector<int> degree(elems.size(), 0);
    std::vector<std::uint64_t> count_up_to_rank(n + 1, 0);
    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
        std::vector<std::uint8_t> coef(worlds);
        for (int w = 0; w < worlds; ++w) coef[w] = (elems[idx] >> w) & 1;
        moebius(coef, n);
        int d = 0;
        for (int m = 1; m < worlds; ++m)
            if (coef[m]) d = std::max(d, std::popcount(static_cast<unsigned>(m)));
        degree[idx] = d;
    }
    for (int m = 0; m <= n; ++m)
        for (std::size_t idx = 0; idx < elems.size(); ++idx)
            if (degree[idx] <= m) ++count_up_to_rank[m];
    census.q1_size = count_up_to_rank[1];
    census.s_sizes.assign(n + 1, 0);
    for (int m = 1; m <= n; ++m)
        census.s_sizes[m] = count_up_to_rank[m] / count_up_to_rank[m - 1];

    // Involution and closure; exhaustive pairs for N <= 3, sampled for N = 4.
    census.involution_ok = true;
    for (auto t : elems)
        if ((t ^ t) != 0) census.involution_ok = false;
    census.closure_ok = true;
    census.associativity_ok = true;
    auto in_group = [&](std::uint32_t t) { return (t & 1u) == 0 && t <= full; };
    if (n <= 3) {
        for (auto a : elems)
            for (auto b : elems) {
                if (!in_group(a ^ b)) census.closure_ok = false;
                for (auto c : elems)
                    if (((a ^ b) ^ c) != (a ^ (b ^ c))) census.associativity_ok = false;
            }
    } else {
        std::mt19937_64 rng(0);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        for (int k = 0; k < 100000; ++k) {
            const std::uint32_t a = elems[pick(rng)], b = elems[pick(rng)],
                                c = elems[pick(rng)];
            if (!in_group(a ^ b)) census.closure_ok = false;
            if (((a ^ b) ^ c) != (a ^ (b ^ c))) census.associativity_ok = false;
        }
    }
    return census;
}

}  // namespace questions
