#include "welldoc/returns.hpp"

#include <algorithm>
#include <deque>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace welldoc {

namespace {

VecModM parikh_mod(const Word& u, std::size_t sigma, unsigned long long m) {
    VecModM v(sigma, 0);
    for (Letter a : u) v[a] = (v[a] + 1) % m;
    return v;
}

VecModM add_mod(const VecModM& a, const VecModM& b, unsigned long long m) {
    VecModM out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % m;
    return out;
}

/// Occurrence positions of `target` in prefix[0, horizon).
std::vector<std::size_t> occurrences(const Word& prefix, const Word& target,
                                     std::size_t horizon) {
    std::vector<std::size_t> pos;
    if (target.empty() || horizon < target.size()) return pos;
    for (std::size_t i = 0; i + target.size() <= horizon; ++i)
        if (std::equal(target.begin(), target.end(), prefix.begin() + i)) pos.push_back(i);
    return pos;
}

}  // namespace

std::set<VecModM> subgroup_mod_m(const std::vector<VecModM>& generators,
                                 std::size_t sigma, unsigned long long m) {
    std::set<VecModM> group;
    std::deque<VecModM> queue;
    VecModM zero(sigma, 0);
    group.insert(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
        VecModM v = queue.front();
        queue.pop_front();
        for (const VecModM& g : generators) {
            VecModM w = add_mod(v, g, m);
            if (group.insert(w).second) queue.push_back(w);
        }
    }
    return group;
}

ReturnSet returns_by_scan(PrefixStream& w, const Word& target, std::size_t horizon) {
    if (target.empty()) throw std::invalid_argument("target factor must be non-empty");
    const Word& prefix = w.prefix(horizon);
    auto pos = occurrences(prefix, target, horizon);
    if (pos.size() < 2)
        throw std::domain_error("target occurs only " + std::to_string(pos.size()) +
                                " time(s) within horizon " + std::to_string(horizon));

    ReturnSet out;
    out.target = target;
    std::set<Word> seen;
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        Word r(prefix.begin() + pos[i], prefix.begin() + pos[i + 1]);
        if (seen.insert(r).second) {
            out.words.push_back(r);
            out.vectors.push_back(parikh(r, w.sigma()));
        }
    }
    out.completeness = Completeness::HorizonOnly;
    return out;
}

namespace {

using PairTable = std::vector<std::vector<std::set<VecModM>>>;

/// One step of the S^i recursion, with per-letter constants precomputed.
struct STableIteration {
    std::size_t sigma;
    unsigned long long m;
    std::vector<PairTable> inner;  // factor classes inside one block phi(c)
    std::vector<std::vector<std::pair<Letter, VecModM>>> suffixes, prefixes;
    std::vector<std::vector<long long>> incidence;

    PairTable table;            // current S^i
    std::vector<bool> letters;  // letters of phi^i(0)

    STableIteration(const Morphism& phi, unsigned long long modulus)
        : sigma(phi.sigma()), m(modulus), incidence(phi.incidence_matrix()) {
        if (!phi.is_prolongable(0))
            throw std::domain_error("morphism is not prolongable on 0");
        if (m < 2) throw std::invalid_argument("modulus must be >= 2");

        inner.assign(sigma, empty_table());
        suffixes.resize(sigma);
        prefixes.resize(sigma);
        for (Letter c = 0; c < sigma; ++c) {
            const Word& im = phi.image(c);
            for (std::size_t i = 0; i < im.size(); ++i) {
                VecModM v(sigma, 0);
                for (std::size_t j = i; j < im.size(); ++j) {
                    v[im[j]] = (v[im[j]] + 1) % m;
                    inner[c][im[i]][im[j]].insert(v);
                }
            }
            VecModM acc(sigma, 0);
            for (std::size_t i = im.size(); i-- > 0;) {
                acc[im[i]] = (acc[im[i]] + 1) % m;
                suffixes[c].emplace_back(im[i], acc);
            }
            acc.assign(sigma, 0);
            for (std::size_t i = 0; i < im.size(); ++i) {
                acc[im[i]] = (acc[im[i]] + 1) % m;
                prefixes[c].emplace_back(im[i], acc);
            }
        }

        // S^1: factors of phi(0); L_1: letters of phi(0).
        table = inner[0];
        letters.assign(sigma, false);
        for (Letter a : phi.image(0)) letters[a] = true;
    }

    PairTable empty_table() const {
        return PairTable(sigma, std::vector<std::set<VecModM>>(sigma));
    }

    /// Advances S^i to S^{i+1}; returns true if nothing changed.
    bool step(const Morphism& phi) {
        PairTable next = empty_table();
        std::vector<bool> next_letters(sigma, false);

        for (Letter c = 0; c < sigma; ++c) {
            if (!letters[c]) continue;
            for (Letter a : phi.image(c)) next_letters[a] = true;
            for (Letter a = 0; a < sigma; ++a)
                for (Letter b = 0; b < sigma; ++b)
                    next[a][b].insert(inner[c][a][b].begin(), inner[c][a][b].end());
        }

        // A factor spanning blocks phi(c) ... phi(d) decomposes as
        // suffix(phi(c)) . phi(u) . prefix(phi(d)) with c u d a factor of
        // the previous power; its class is suff + A*(v - e_c - e_d) + pref.
        for (Letter c = 0; c < sigma; ++c) {
            for (Letter d = 0; d < sigma; ++d) {
                for (const VecModM& v : table[c][d]) {
                    VecModM u = v;
                    u[c] = (u[c] + m - 1) % m;
                    u[d] = (u[d] + m - 1) % m;
                    VecModM au(sigma, 0);
                    for (std::size_t i = 0; i < sigma; ++i) {
                        unsigned long long s = 0;
                        for (std::size_t j = 0; j < sigma; ++j)
                            s += static_cast<unsigned long long>(incidence[i][j]) % m * u[j];
                        au[i] = s % m;
                    }
                    for (const auto& [first, sv] : suffixes[c])
                        for (const auto& [last, pv] : prefixes[d])
                            next[first][last].insert(add_mod(add_mod(sv, au, m), pv, m));
                }
            }
        }

        bool stable = next == table && next_letters == letters;
        table = std::move(next);
        letters = std::move(next_letters);
        return stable;
    }
};

}  // namespace

STable s_table_fixpoint(const Morphism& phi, unsigned long long m) {
    const std::size_t sigma = phi.sigma();
    STableIteration it(phi, m);

    // Iteration cap sigma^2 * m^sigma; stabilization is guaranteed below it.
    unsigned long long cap = sigma * sigma;
    for (std::size_t i = 0; i < sigma; ++i) {
        if (cap > (1ull << 40)) break;
        cap *= m;
    }

    for (unsigned long long step = 1; step <= cap; ++step) {
        if (it.step(phi)) {
            STable result;
            result.sigma = sigma;
            result.modulus = m;
            result.step = step;
            result.sets = std::move(it.table);
            return result;
        }
    }
    throw std::logic_error("s-table failed to stabilize within sigma^2 * m^sigma iterations");
}

STable s_table_at(const Morphism& phi, unsigned long long m, std::size_t steps) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    STableIteration it(phi, m);
    for (std::size_t i = 1; i < steps; ++i) it.step(phi);
    STable result;
    result.sigma = phi.sigma();
    result.modulus = m;
    result.step = steps;
    result.sets = std::move(it.table);
    return result;
}

ReturnSet returns_complete(const Morphism& phi, unsigned long long m) {
    if (!phi.is_prolongable(0))
        throw std::domain_error("morphism is not prolongable on 0");
    const std::size_t sigma = phi.sigma();

    STable stable = s_table_fixpoint(phi, m);

    // A factor beginning and ending with 0 is a run of consecutive returns
    // plus a trailing 0, so subtracting e_0 from each class of S_{0,0}
    // yields generators of the mod-m group of return vectors.
    std::vector<VecModM> ref_gens;
    for (const VecModM& v : stable.at(0, 0)) {
        VecModM g = v;
        g[0] = (g[0] + m - 1) % m;
        ref_gens.push_back(g);
    }
    std::set<VecModM> ref_group = subgroup_mod_m(ref_gens, sigma, m);

    ReturnSet out;
    out.target = {0};
    std::set<Word> seen;

    PrefixStream w(phi, 0);
    constexpr std::size_t kMaxPrefix = 5'000'000;
    std::size_t length = phi.image(0).size();
    bool grown_since_last = true;
    while (true) {
        std::size_t prev_count = out.words.size();
        const Word& prefix = w.prefix(length);
        std::vector<std::size_t> zeros;
        for (std::size_t i = 0; i < length; ++i)
            if (prefix[i] == 0) zeros.push_back(i);
        for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
            Word r(prefix.begin() + zeros[i], prefix.begin() + zeros[i + 1]);
            if (seen.insert(r).second) {
                out.words.push_back(r);
                out.vectors.push_back(parikh(r, sigma));
            }
        }
        grown_since_last = out.words.size() != prev_count;

        if (!grown_since_last && !out.words.empty()) {
            std::vector<VecModM> gens;
            for (const Parikh& p : out.vectors) {
                VecModM g(sigma);
                for (std::size_t i = 0; i < sigma; ++i)
                    g[i] = static_cast<unsigned long long>(p[i]) % m;
                gens.push_back(std::move(g));
            }
            if (subgroup_mod_m(gens, sigma, m) == ref_group) break;
        }

        if (length >= kMaxPrefix)
            throw std::domain_error(
                "return set did not stabilize; the fixed point may be non-recurrent");
        // One further phi-application.
        std::size_t next_length = 0;
        for (std::size_t i = 0; i < length; ++i) next_length += phi.image(prefix[i]).size();
        length = std::min(next_length, kMaxPrefix);
    }

    out.completeness = Completeness::Certified;
    out.stabilization_step = stable.step;
    out.modulus = m;
    return out;
}

ReturnSet returns_via_images(const Morphism& phi) {
    const std::size_t sigma = phi.sigma();
    for (Letter a = 0; a < sigma; ++a) {
        std::vector<bool> present(sigma, false);
        for (Letter b : phi.image(a)) present[b] = true;
        if (std::find(present.begin(), present.end(), false) != present.end())
            throw std::invalid_argument(
                "image of letter " + std::to_string(a) +
                " does not contain every letter; use returns_complete instead");
    }
    if (!phi.is_prolongable(0))
        throw std::domain_error("morphism is not prolongable on 0");

    // Decompose phi(a) = x_a 0 v_{a,0} 0 ... 0 v_{a,k-1} 0 y_a with the
    // x, y, v blocks free of 0.
    std::vector<Word> head(sigma), tail(sigma);
    std::vector<std::vector<Word>> blocks(sigma);
    for (Letter a = 0; a < sigma; ++a) {
        const Word& im = phi.image(a);
        std::vector<std::size_t> zeros;
        for (std::size_t i = 0; i < im.size(); ++i)
            if (im[i] == 0) zeros.push_back(i);
        head[a] = Word(im.begin(), im.begin() + zeros.front());
        tail[a] = Word(im.begin() + zeros.back() + 1, im.end());
        for (std::size_t i = 0; i + 1 < zeros.size(); ++i)
            blocks[a].push_back(Word(im.begin() + zeros[i] + 1, im.begin() + zeros[i + 1]));
    }

    PrefixStream w(phi, 0);
    std::size_t horizon = 100'000;
    auto graph = rauzy_graph1(w, horizon);

    std::vector<Word> candidates;
    std::set<Word> seen;
    auto add = [&](Word r) {
        if (seen.insert(r).second) candidates.push_back(std::move(r));
    };
    for (Letter a = 0; a < sigma; ++a) {
        for (const Word& v : blocks[a]) {
            Word r{0};
            r.insert(r.end(), v.begin(), v.end());
            add(std::move(r));
        }
    }
    for (Letter a = 0; a < sigma; ++a) {
        for (Letter b = 0; b < sigma; ++b) {
            if (!graph[a][b]) continue;
            Word r{0};
            r.insert(r.end(), tail[a].begin(), tail[a].end());
            r.insert(r.end(), head[b].begin(), head[b].end());
            add(std::move(r));
        }
    }

    // The lemma gives a superset; keep only candidates r with r0 occurring.
    ReturnSet out;
    out.target = {0};
    const Word& prefix = w.prefix(horizon);
    for (const Word& r : candidates) {
        Word probe = r;
        probe.push_back(0);
        if (!occurrences(prefix, probe, horizon).empty()) {
            out.words.push_back(r);
            out.vectors.push_back(parikh(r, sigma));
        }
    }
    out.completeness = Completeness::Certified;
    return out;
}

std::string ReturnSet::to_json() const {
    nlohmann::json j;
    j["target"] = word_to_string(target);
    auto& ws = j["words"] = nlohmann::json::array();
    for (const Word& w : words) ws.push_back(word_to_string(w));
    auto& vs = j["parikh_vectors"] = nlohmann::json::array();
    for (const Parikh& p : vectors) vs.push_back(p);
    j["completeness"] =
        completeness == Completeness::Certified ? "certified" : "horizon-only";
    if (completeness == Completeness::Certified) {
        j["certificate"] = {{"stabilization_step", stabilization_step},
                            {"modulus", modulus}};
    }
    return j.dump();
}

}  // namespace welldoc
