// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles and generators. Nothing here calls into the replacement
// or status code of the library: the oracles rebuild the 0-graph from the
// document's incidences and measure it with Floyd-Warshall, and the ordinal
// model adds terms one at a time with explicit absorption.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tfstatus/ordinal.hpp"
#include "tfstatus/transfinite_model.hpp"

namespace tfstatus::testing {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string sample_path(const std::string& name) {
    return std::string(TFSTATUS_SAMPLES_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
    return std::string(TFSTATUS_GOLDEN_DIR) + "/" + name;
}

inline TransfiniteGraph load_sample(const std::string& name) {
    return parse_transfinite(read_file(sample_path(name)));
}

// -- ordinal model ------------------------------------------------------------

/// Ordinal < w^w as (exponent, coefficient) terms with 64-bit coefficients.
using TermList = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

/// Appends a single term w^e * c to `acc`: every trailing term with a smaller
/// exponent vanishes, an equal exponent merges.
inline void model_push(TermList& acc, std::uint64_t e, std::uint64_t c) {
    if (c == 0) {
        return;
    }
    while (!acc.empty() && acc.back().first < e) {
        acc.pop_back();
    }
    if (!acc.empty() && acc.back().first == e) {
        acc.back().second += c;
    } else {
        acc.emplace_back(e, c);
    }
}

inline TermList model_add(const TermList& a, const TermList& b) {
    TermList out;
    for (const auto& [e, c] : a) {
        model_push(out, e, c);
    }
    for (const auto& [e, c] : b) {
        model_push(out, e, c);
    }
    return out;
}

inline TermList to_model(const Ordinal& a) {
    TermList out;
    for (const auto& t : a.terms()) {
        out.emplace_back(t.exponent, static_cast<std::uint64_t>(t.coefficient));
    }
    return out;
}

inline Ordinal from_model(const TermList& terms) {
    std::vector<OrdinalTerm> out;
    for (const auto& [e, c] : terms) {
        out.push_back({e, Natural(c)});
    }
    return Ordinal::from_terms(std::move(out));
}

inline Ordinal random_ordinal(std::mt19937_64& rng, std::uint64_t max_exponent = 5,
                              std::uint64_t max_coefficient = 20) {
    std::vector<OrdinalTerm> terms;
    for (std::uint64_t e = max_exponent + 1; e-- > 0;) {
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
            terms.push_back({e, Natural(std::uniform_int_distribution<std::uint64_t>(1, max_coefficient)(rng))});
        }
    }
    return Ordinal::from_terms(std::move(terms));
}

// -- finite-status oracle ------------------------------------------------------

/// Statuses in the 0-graph of a transfinite graph, rebuilt from scratch.
/// Keys: nonsingleton mu-node ids and section representative ids.
struct FiniteOracle {
    std::vector<std::string> names;
    std::vector<std::vector<std::uint64_t>> dist;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    bool connected = true;
    std::map<std::string, std::uint64_t> status;
};

inline FiniteOracle finite_oracle(const TransfiniteGraph& g) {
    constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max() / 4;
    FiniteOracle o;
    std::map<std::string, std::size_t> section_index;
    for (const auto& x : g.mu_nodes) {
        if (x.tips.size() >= 2) {
            o.names.push_back(x.id);
        }
    }
    for (const auto& s : g.sections) {
        section_index[s.id] = o.names.size();
        o.names.push_back(s.representative);
    }
    const std::size_t n_core = o.names.size();
    for (const auto& x : g.mu_nodes) {
        if (x.tips.size() == 1 && std::count(g.include_singletons.begin(), g.include_singletons.end(), x.id)) {
            o.names.push_back(x.id);
        }
    }
    const std::size_t n = o.names.size();
    o.dist.assign(n, std::vector<std::uint64_t>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        o.dist[i][i] = 0;
    }
    auto link = [&](std::size_t a, std::size_t b) {
        if (o.dist[a][b] != 1) {
            o.dist[a][b] = o.dist[b][a] = 1;
            ++o.q;
        }
    };
    std::size_t k = 0;
    std::size_t leaf = n_core;
    for (const auto& x : g.mu_nodes) {
        if (x.tips.size() >= 2) {
            for (const auto& t : x.tips) {
                link(k, section_index.at(t.section));
            }
            ++k;
        } else if (leaf < n && o.names[leaf] == x.id) {
            link(leaf, section_index.at(x.tips.front().section));
            ++leaf;
        }
    }
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                o.dist[i][j] = std::min(o.dist[i][j], o.dist[i][m] + o.dist[m][j]);
            }
        }
    }
    o.p = n;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (o.dist[i][j] >= inf) {
                o.connected = false;
            }
            sum += o.dist[i][j];
        }
        if (i < n_core) {
            o.status[o.names[i]] = sum;
        }
    }
    return o;
}

// -- random transfinite documents -------------------------------------------------

struct RandomShape {
    std::uint64_t max_rank = 3;
    std::size_t max_sections = 8;
    std::size_t max_nonsingleton = 8;
    std::size_t max_tips = 4;
    std::size_t max_singletons = 2;
};

/// A random graph whose 0-graph is connected. Singleton mu-nodes are added
/// and included at random; no nondisconnectable pairs are declared.
inline TransfiniteGraph random_transfinite(std::mt19937_64& rng, const RandomShape& shape = {}) {
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    while (true) {
        TransfiniteGraph g;
        g.rank = pick(1, shape.max_rank);
        const auto m = pick(1, shape.max_sections);
        const auto k = pick(m > 1 ? 1 : 0, shape.max_nonsingleton);
        for (std::size_t i = 0; i < m; ++i) {
            Section s;
            s.id = "S" + std::to_string(i + 1);
            const auto extra = pick(0, 2);
            for (std::size_t j = 0; j <= extra; ++j) {
                s.internal_nodes.push_back({"y" + std::to_string(i + 1) + "_" + std::to_string(j),
                                            pick(0, g.rank - 1), j == 0 || pick(0, 1) == 1});
            }
            s.representative = s.internal_nodes.front().id;
            g.sections.push_back(std::move(s));
        }
        std::size_t tip_no = 0;
        auto make_tip = [&](std::size_t section) {
            return Tip{"t" + std::to_string(++tip_no), "S" + std::to_string(section + 1)};
        };
        for (std::size_t i = 0; i < k; ++i) {
            MuNode x{"X" + std::to_string(i + 1), {}};
            const auto tips = pick(2, shape.max_tips);
            for (std::size_t j = 0; j < tips; ++j) {
                x.tips.push_back(make_tip(pick(0, m - 1)));
            }
            g.mu_nodes.push_back(std::move(x));
        }
        const auto singles = pick(0, shape.max_singletons);
        for (std::size_t i = 0; i < singles; ++i) {
            MuNode z{"Z" + std::to_string(i + 1), {make_tip(pick(0, m - 1))}};
            if (pick(0, 1) == 1) {
                g.include_singletons.push_back(z.id);
            }
            g.mu_nodes.push_back(std::move(z));
        }
        if (finite_oracle(g).connected) {
            return g;
        }
    }
}

/// Tip pairs violating Condition A: tips of two distinct nonsingleton mu-nodes.
inline std::vector<std::pair<std::string, std::string>> condition_a_violations(
    const TransfiniteGraph& g, std::mt19937_64& rng, std::size_t count) {
    std::vector<const MuNode*> nonsingleton;
    for (const auto& x : g.mu_nodes) {
        if (x.nonsingleton()) {
            nonsingleton.push_back(&x);
        }
    }
    std::vector<std::pair<std::string, std::string>> out;
    if (nonsingleton.size() < 2) {
        return out;
    }
    std::uniform_int_distribution<std::size_t> node(0, nonsingleton.size() - 1);
    while (out.size() < count) {
        const auto* a = nonsingleton[node(rng)];
        const auto* b = nonsingleton[node(rng)];
        if (a == b) {
            continue;
        }
        out.emplace_back(a->tips[rng() % a->tips.size()].id, b->tips[rng() % b->tips.size()].id);
    }
    return out;
}

} // namespace tfstatus::testing
