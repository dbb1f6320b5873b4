#include "autsys/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "autsys/error.hpp"
#include "autsys/ops.hpp"
#include "autsys/order.hpp"

namespace autsys {

std::vector<std::string> default_labels(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back("e" + std::to_string(i));
    return labels;
}

namespace {

class Enumerator {
public:
    Enumerator(std::size_t n, bool normalized, const std::function<void(const AutonomousSystem&)>& sink)
        : n_(n), sink_(sink), labels_(default_labels(n)), state_(std::size_t{1} << n, Undecided),
          forced_(std::size_t{1} << n, 0)
    {
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s)
            order_.push_back(Subset{s});
        std::stable_sort(order_.begin(), order_.end(), [](Subset a, Subset b) { return a.size() < b.size(); });
        state_[0] = In;
        chosen_.push_back(Subset{});
        if (normalized)
            ++forced_[Subset::full(n).bits()];
    }

    void run() { step(0); }

private:
    enum State : unsigned char { Undecided, In, Out };

    bool accessible(Subset s) const
    {
        for (Element x : s)
            if (state_[s.without(x).bits()] == In)
                return true;
        return false;
    }

    void step(std::size_t pos)
    {
        if (pos == order_.size()) {
            sink_(AutonomousSystem(AutonomousSystem::Trusted{}, labels_, chosen_));
            return;
        }
        const Subset s = order_[pos];
        const std::uint64_t id = s.bits();
        const bool must = forced_[id] > 0;
        if (accessible(s)) {
            state_[id] = In;
            const std::size_t before = chosen_.size();
            // Strictly larger unions are undecided until their turn.
            std::vector<std::uint64_t> pushed;
            for (std::size_t i = 0; i < before; ++i) {
                const Subset u = s | chosen_[i];
                if (u != s) {
                    ++forced_[u.bits()];
                    pushed.push_back(u.bits());
                }
            }
            chosen_.push_back(s);
            step(pos + 1);
            chosen_.pop_back();
            for (std::uint64_t u : pushed)
                --forced_[u];
        }
        if (!must) {
            state_[id] = Out;
            step(pos + 1);
        }
        state_[id] = Undecided;
    }

    std::size_t n_;
    const std::function<void(const AutonomousSystem&)>& sink_;
    std::vector<std::string> labels_;
    std::vector<Subset> order_;
    std::vector<State> state_;
    std::vector<unsigned> forced_;
    std::vector<Subset> chosen_;
};

std::vector<Subset> union_closure(const std::vector<Subset>& seeds)
{
    std::unordered_set<std::uint64_t> seen;
    std::vector<Subset> out;
    for (Subset s : seeds)
        if (seen.insert(s.bits()).second)
            out.push_back(s);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const Subset u = out[i] | out[j];
            if (seen.insert(u.bits()).second)
                out.push_back(u);
        }
    return out;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::size_t below(std::size_t k) { return static_cast<std::size_t>(engine_() % k); }
    std::vector<unsigned> permutation(std::size_t n)
    {
        std::vector<unsigned> p(n);
        std::iota(p.begin(), p.end(), 0U);
        for (std::size_t i = n; i > 1; --i)
            std::swap(p[i - 1], p[below(i)]);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

AutonomousSystem random_poset_system(std::size_t n, Rng& rng)
{
    const auto rank = rng.permutation(n);
    const std::size_t density = 2 + rng.below(5); // edge chance 2/10 .. 6/10
    const auto labels = default_labels(n);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.below(10) < density)
                pairs.emplace_back(labels[rank[i]], labels[rank[j]]);
    return from_poset(PartialOrder::from_pairs(labels, pairs));
}

AutonomousSystem chain_closure_system(std::size_t n, bool normalized, Rng& rng)
{
    std::vector<Subset> seeds{Subset{}};
    const std::size_t chains = 1 + rng.below(n + 1);
    for (std::size_t c = 0; c < chains; ++c) {
        const auto perm = rng.permutation(n);
        const std::size_t length = (normalized && c == 0) ? n : rng.below(n + 1);
        Subset prefix;
        for (std::size_t i = 0; i < length; ++i) {
            prefix = prefix.with(Element{perm[i]});
            seeds.push_back(prefix);
        }
    }
    return AutonomousSystem(AutonomousSystem::Trusted{}, default_labels(n), union_closure(seeds));
}

AutonomousSystem subdot_of_larger(std::size_t n, bool normalized, Rng& rng)
{
    AutonomousSystem current = chain_closure_system(n + 2, normalized, rng);
    while (current.size() > n) {
        const Subset one = Subset::single(Element{static_cast<unsigned>(rng.below(current.size()))});
        // Contraction keeps the full ground a member; deletion need not.
        const bool contract = normalized || rng.below(2) == 0;
        current = contract ? contraction(current, one) : deletion(current, one);
    }
    std::vector<Subset> family(current.family().begin(), current.family().end());
    return AutonomousSystem(AutonomousSystem::Trusted{}, default_labels(n), std::move(family));
}

} // namespace

void enumerate_all(std::size_t n, bool normalized, const std::function<void(const AutonomousSystem&)>& sink)
{
    if (n > kMaxEnumerate)
        throw Error(ErrorKind::TooLarge, "exhaustive enumeration supports n <= " + std::to_string(kMaxEnumerate));
    Enumerator(n, normalized, sink).run();
}

std::vector<AutonomousSystem> enumerate_all(std::size_t n, bool normalized)
{
    std::vector<AutonomousSystem> out;
    enumerate_all(n, normalized, [&](const AutonomousSystem& s) { out.push_back(s); });
    return out;
}

const char* to_string(GenMethod method) noexcept
{
    switch (method) {
    case GenMethod::FromRandomPoset: return "from-random-poset";
    case GenMethod::ChainClosure: return "chain-closure";
    case GenMethod::SubdotOfLarger: return "subdot-of-larger";
    }
    return "unknown";
}

GenMethod parse_gen_method(const std::string& name)
{
    for (GenMethod m : {GenMethod::FromRandomPoset, GenMethod::ChainClosure, GenMethod::SubdotOfLarger})
        if (name == to_string(m))
            return m;
    throw Error(ErrorKind::MalformedInput, "unknown generation method '" + name + "'");
}

AutonomousSystem random_system(const GenSpec& spec)
{
    if (spec.n > kMaxRandom)
        throw Error(ErrorKind::TooLarge, "random generation supports n <= " + std::to_string(kMaxRandom));
    Rng rng(spec.seed);
    switch (spec.method) {
    case GenMethod::FromRandomPoset: return random_poset_system(spec.n, rng);
    case GenMethod::ChainClosure: return chain_closure_system(spec.n, spec.normalized, rng);
    case GenMethod::SubdotOfLarger: return subdot_of_larger(spec.n, spec.normalized, rng);
    }
    throw Error(ErrorKind::MalformedInput, "unknown generation method");
}

} // namespace autsys
