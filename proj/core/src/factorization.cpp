#include "vblocks/factorization.hpp"

#include "vblocks/errors.hpp"

#include <json.hpp> // vendored nlohmann::json

#include <algorithm>
#include <functional>

namespace vblocks {

using nlohmann::json;

RankEngine::RankEngine(FusionRing ring) : ring_(std::move(ring)), nlabels_(ring_.size()) {
    n_dense_.assign(nlabels_ * nlabels_ * nlabels_, 0);
    for (std::size_t a = 0; a < nlabels_; ++a)
        for (std::size_t b = 0; b < nlabels_; ++b)
            for (std::size_t c = 0; c < nlabels_; ++c)
                n_dense_[(a * nlabels_ + b) * nlabels_ + c] = ring_.n(a, b, c);
    dual_dense_.resize(nlabels_);
    for (std::size_t a = 0; a < nlabels_; ++a) dual_dense_[a] = ring_.dual(a);
}

std::size_t StableGraph::valence(std::size_t v) const {
    std::size_t val = 0;
    for (const auto& [a, b] : edges) {
        if (a == v) ++val;
        if (b == v) ++val;
    }
    for (const auto& [a, l] : legs)
        if (a == v) ++val;
    return val;
}

long StableGraph::total_genus() const {
    // disjoint unions allowed: genus = sum g_v + (E - V + #components)
    std::vector<std::size_t> parent(vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : edges) parent[find(a)] = find(b);
    std::size_t components = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(i) == i) ++components;
    long g = static_cast<long>(edges.size()) - static_cast<long>(vertices.size()) +
             static_cast<long>(components);
    for (const auto& v : vertices) g += v.genus;
    return g;
}

bool StableGraph::is_stable() const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (2 * vertices[v].genus - 2 + static_cast<long>(valence(v)) <= 0) return false;
    return true;
}

StableGraph StableGraph::from_json(const std::string& text, const FusionRing& ring) {
    StableGraph g;
    json doc;
    try {
        doc = json::parse(text);
        for (const auto& v : doc.at("vertices")) g.vertices.push_back({v.at("genus").get<long>()});
        if (doc.contains("edges"))
            for (const auto& e : doc.at("edges"))
                g.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        if (doc.contains("legs"))
            for (const auto& l : doc.at("legs")) {
                const std::string lbl = l.at("label").get<std::string>();
                auto idx = ring.index_of(lbl);
                if (!idx) throw InvalidCatalogError("graph leg label '" + lbl + "' not in ring");
                g.legs.emplace_back(l.at("vertex").get<std::size_t>(), *idx);
            }
    } catch (const InvalidCatalogError&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("stable graph document: ") + e.what());
    }
    for (const auto& [a, b] : g.edges)
        if (a >= g.vertices.size() || b >= g.vertices.size())
            throw std::invalid_argument("stable graph document: edge endpoint out of range");
    for (const auto& [v, l] : g.legs)
        if (v >= g.vertices.size())
            throw std::invalid_argument("stable graph document: leg vertex out of range");
    return g;
}

// ---------------------------------------------------------------------------
// RankEngine
// ---------------------------------------------------------------------------

BigInt RankEngine::rank_base(long genus, const std::vector<std::size_t>& s) const {
    // explicit genus-0 low-point bases
    if (genus == 0 && s.size() == 3) return BigInt(n_fast(s[0], s[1], s[2]));
    if (genus == 0 && s.size() == 2) return BigInt(s[1] == dual_dense_[s[0]] ? 1 : 0);
    if (genus == 0 && s.size() == 1) return BigInt(s[0] == ring_.vacuum() ? 1 : 0);
    throw UnstableQueryError("rank: no base case for (g=" + std::to_string(genus) + ", n=" +
                             std::to_string(s.size()) + ")");
}

BigInt RankEngine::rank(long genus, std::vector<std::size_t> insertions) const {
    if (genus < 0) throw UnstableQueryError("rank: negative genus");
    for (std::size_t l : insertions)
        if (l >= ring_.size()) throw UnstableQueryError("rank: insertion label out of range");
    // vacuum routing for queries below the explicit base cases
    if (insertions.empty()) insertions.push_back(ring_.vacuum());
    std::sort(insertions.begin(), insertions.end());
    return rank_canonical(genus, std::move(insertions));
}

BigInt RankEngine::rank_canonical(long genus, std::vector<std::size_t> s) const {
    if (genus == 0 && s.size() <= 3) return rank_base(genus, s);

    const auto key = std::make_pair(genus, s);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    BigInt total = 0;
    const std::size_t nlabels = ring_.size();
    if (genus > 0) {
        // non-separating step: R(g,S) = sum_W R(g-1, S + {W, W'})
        for (std::size_t w = 0; w < nlabels; ++w) {
            auto s2 = s;
            s2.push_back(w);
            s2.push_back(dual_dense_[w]);
            std::sort(s2.begin(), s2.end());
            total += rank_canonical(genus - 1, std::move(s2));
        }
    } else {
        // genus 0, n >= 4: split off the first two insertions
        std::vector<std::size_t> rest(s.begin() + 2, s.end());
        for (std::size_t t = 0; t < nlabels; ++t) {
            const long n3 = n_fast(s[0], s[1], t);
            if (n3 == 0) continue;
            auto s2 = rest;
            s2.push_back(dual_dense_[t]);
            std::sort(s2.begin(), s2.end());
            total += BigInt(n3) * rank_canonical(0, std::move(s2));
        }
    }

    std::lock_guard<std::mutex> lock(memo_mutex_);
    return memo_.emplace(key, std::move(total)).first->second;
}

BigInt RankEngine::rank_via_graph(const StableGraph& graph) const {
    // closed positive-genus vertices are admitted and routed through vacuum
    // insertion by rank(); everything else must satisfy vertex stability
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        const long g = graph.vertices[v].genus;
        const long val = static_cast<long>(graph.valence(v));
        if (2 * g - 2 + val <= 0 && !(g >= 1 && val == 0))
            throw UnstableQueryError("rank_via_graph: unstable vertex " + std::to_string(v));
    }
    for (const auto& [v, l] : graph.legs)
        if (l >= ring_.size()) throw UnstableQueryError("rank_via_graph: leg label out of range");

    const std::size_t ne = graph.edges.size();
    const std::size_t nv = graph.vertices.size();

    // per-vertex incidence: legs first, then (edge, side) slots
    std::vector<std::vector<std::size_t>> base_labels(nv);
    for (const auto& [v, l] : graph.legs) base_labels[v].push_back(l);
    std::vector<std::vector<std::pair<std::size_t, bool>>> slots(nv); // (edge, is_plus_side)
    for (std::size_t e = 0; e < ne; ++e) {
        slots[graph.edges[e].first].emplace_back(e, true);
        slots[graph.edges[e].second].emplace_back(e, false);
    }
    // a vertex is complete once every incident edge is assigned
    std::vector<std::size_t> last_edge(nv, 0);
    for (std::size_t v = 0; v < nv; ++v)
        for (const auto& [e, side] : slots[v]) last_edge[v] = std::max(last_edge[v], e + 1);

    std::vector<std::size_t> assignment(ne, 0);
    BigInt total = 0;

    std::function<void(std::size_t, BigInt)> dfs = [&](std::size_t e, BigInt partial) {
        if (e == ne) {
            total += partial;
            return;
        }
        for (std::size_t w = 0; w < ring_.size(); ++w) {
            assignment[e] = w;
            BigInt factor = partial;
            bool dead = false;
            for (std::size_t v = 0; v < nv && !dead; ++v) {
                if (last_edge[v] != e + 1) continue; // completes exactly now
                std::vector<std::size_t> labels = base_labels[v];
                for (const auto& [ee, plus] : slots[v])
                    labels.push_back(plus ? assignment[ee] : ring_.dual(assignment[ee]));
                const BigInt r = rank(graph.vertices[v].genus, std::move(labels));
                if (r == 0) {
                    dead = true;
                    break;
                }
                factor *= r;
            }
            if (!dead) dfs(e + 1, factor);
        }
    };

    BigInt initial = 1;
    for (std::size_t v = 0; v < nv; ++v)
        if (last_edge[v] == 0) initial *= rank(graph.vertices[v].genus, base_labels[v]);
    if (ne == 0) return initial;
    dfs(0, initial);
    return total;
}

// ---------------------------------------------------------------------------
// invariance check
// ---------------------------------------------------------------------------

namespace {

// deterministic cross-platform rng
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return n == 0 ? 0 : next() % n; }
};

} // namespace

RankEngine::InvarianceReport RankEngine::invariance_check(long genus,
                                                          std::vector<std::size_t> insertions,
                                                          long trials,
                                                          std::uint64_t seed) const {
    InvarianceReport report;
    report.canonical = rank(genus, insertions);

    // randomized full-degeneration evaluation, no memo sharing
    std::function<BigInt(long, std::vector<std::size_t>, SplitMix64&)> eval =
        [&](long g, std::vector<std::size_t> s, SplitMix64& rng) -> BigInt {
        if (s.empty()) s.push_back(ring_.vacuum());
        if (g == 0 && s.size() <= 3) return rank_base(0, s);

        if (g == 0) {
            // random pair split {s_i, s_j} | rest
            const std::size_t i = rng.below(s.size());
            std::size_t j = rng.below(s.size() - 1);
            if (j >= i) ++j;
            std::vector<std::size_t> rest;
            for (std::size_t t = 0; t < s.size(); ++t)
                if (t != i && t != j) rest.push_back(s[t]);
            BigInt total = 0;
            for (std::size_t w = 0; w < ring_.size(); ++w) {
                const long n3 = n_fast(s[i], s[j], w);
                if (n3 == 0) continue;
                auto s2 = rest;
                s2.push_back(dual_dense_[w]);
                total += BigInt(n3) * eval(0, std::move(s2), rng);
            }
            return total;
        }

        // g >= 1: collect admissible separating splits (both sides stable
        // with their node point), plus the non-separating move
        struct Split {
            long g1;
            std::vector<bool> mask; // true -> side 1
        };
        std::vector<Split> seps;
        const std::size_t n = s.size();
        for (long g1 = 0; g1 <= g; ++g1) {
            const long g2 = g - g1;
            for (std::size_t mask = 0; mask < (1u << n); ++mask) {
                std::size_t n1 = 0;
                for (std::size_t t = 0; t < n; ++t)
                    if (mask & (1u << t)) ++n1;
                const std::size_t n2 = n - n1;
                if (2 * g1 - 2 + static_cast<long>(n1) + 1 <= 0) continue;
                if (2 * g2 - 2 + static_cast<long>(n2) + 1 <= 0) continue;
                std::vector<bool> m(n);
                for (std::size_t t = 0; t < n; ++t) m[t] = (mask & (1u << t)) != 0;
                seps.push_back({g1, std::move(m)});
            }
        }

        const std::size_t choice = rng.below(seps.size() + 1);
        if (choice == seps.size()) {
            BigInt total = 0;
            for (std::size_t w = 0; w < ring_.size(); ++w) {
                auto s2 = s;
                s2.push_back(w);
                s2.push_back(dual_dense_[w]);
                total += eval(g - 1, std::move(s2), rng);
            }
            return total;
        }
        const Split& sp = seps[choice];
        std::vector<std::size_t> s1, s2;
        for (std::size_t t = 0; t < n; ++t) (sp.mask[t] ? s1 : s2).push_back(s[t]);
        BigInt total = 0;
        for (std::size_t w = 0; w < ring_.size(); ++w) {
            auto left = s1;
            left.push_back(w);
            const BigInt rl = eval(sp.g1, std::move(left), rng);
            if (rl == 0) continue;
            auto right = s2;
            right.push_back(dual_dense_[w]);
            total += rl * eval(g - sp.g1, std::move(right), rng);
        }
        return total;
    };

    for (long t = 0; t < trials; ++t) {
        SplitMix64 rng(seed + static_cast<std::uint64_t>(t) * 0x9e3779b97f4a7c15ull + 1);
        report.trial_values.push_back(eval(genus, insertions, rng));
    }
    for (std::size_t t = 0; t < report.trial_values.size(); ++t) {
        if (report.trial_values[t] != report.canonical) {
            report.agree = false;
            report.witness = "trial " + std::to_string(t) + " gave " +
                             report.trial_values[t].str() + ", canonical recursion gave " +
                             report.canonical.str();
            break;
        }
    }
    return report;
}

StableGraph trivalent_graph(long genus, std::size_t vacuum_label) {
    StableGraph g;
    if (genus < 1) throw UnstableQueryError("trivalent_graph: genus must be >= 1");
    if (genus == 1) {
        g.vertices.push_back({0});
        g.edges.emplace_back(0, 0); // self-loop
        g.legs.emplace_back(0, vacuum_label);
        return g;
    }
    const std::size_t n = static_cast<std::size_t>(2 * (genus - 1));
    for (std::size_t v = 0; v < n; ++v) g.vertices.push_back({0});
    for (std::size_t v = 0; v < n; ++v) g.edges.emplace_back(v, (v + 1) % n); // cycle
    for (std::size_t v = 0; v < n / 2; ++v) g.edges.emplace_back(v, v + n / 2); // chords
    return g;
}

} // namespace vblocks
