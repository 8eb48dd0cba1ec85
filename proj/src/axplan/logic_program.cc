#include "axplan/logic_program.h"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

#include "axplan/errors.h"

namespace axplan {

int LogicProgram::add_atom(const std::string &name) {
    atom_names_.push_back(name);
    return num_atoms() - 1;
}

int LogicProgram::atom(const std::string &name) const {
    for (int i = 0; i < num_atoms(); ++i)
        if (atom_names_[i] == name)
            return i;
    return -1;
}

void LogicProgram::add_rule(int head, std::vector<int> pos, std::vector<int> neg) {
    if (head < 0 || head >= num_atoms())
        throw InvalidTask("rule head is not a declared atom");
    auto check = [&](const std::vector<int> &atoms) {
        for (int a : atoms)
            if (a < 0 || a >= num_atoms())
                throw InvalidTask("rule body atom is not declared");
    };
    check(pos);
    check(neg);
    for (int a : pos)
        if (std::find(neg.begin(), neg.end(), a) != neg.end())
            throw InvalidTask("atom occurs both positively and negatively in one body");
    rules_.push_back(Rule{head, std::move(pos), std::move(neg)});
}

bool LogicProgram::has_negation() const {
    for (const Rule &r : rules_)
        if (!r.neg.empty())
            return true;
    return false;
}

std::string LogicProgram::to_text() const {
    std::ostringstream out;
    for (const Rule &r : rules_) {
        out << atom_names_[r.head];
        if (!r.pos.empty() || !r.neg.empty()) {
            out << " :- ";
            bool first = true;
            for (int a : r.pos) {
                if (!first)
                    out << ", ";
                out << atom_names_[a];
                first = false;
            }
            for (int a : r.neg) {
                if (!first)
                    out << ", ";
                out << "not " << atom_names_[a];
                first = false;
            }
        }
        out << ".\n";
    }
    return out.str();
}

bool body_satisfied(const Rule &rule, const Interp &m) {
    for (int a : rule.pos)
        if (!m[a])
            return false;
    for (int a : rule.neg)
        if (m[a])
            return false;
    return true;
}

LogicProgram reduct(const LogicProgram &p, const Interp &m) {
    LogicProgram result;
    for (int a = 0; a < p.num_atoms(); ++a)
        result.add_atom(p.atom_name(a));
    for (const Rule &r : p.rules()) {
        bool blocked = false;
        for (int a : r.neg)
            if (m[a]) {
                blocked = true;
                break;
            }
        if (!blocked)
            result.add_rule(r.head, r.pos, {});
    }
    return result;
}

Interp least_model(const LogicProgram &p) {
    if (p.has_negation())
        throw NotNegationFree("least model is only defined for negation-free programs");
    int n = p.num_atoms();
    Interp m(n, false);
    // Counter propagation: a rule fires once all its positive body atoms hold.
    const auto &rules = p.rules();
    std::vector<int> missing(rules.size());
    std::vector<std::vector<int>> watchers(n);
    std::vector<int> queue;
    for (size_t i = 0; i < rules.size(); ++i) {
        missing[i] = static_cast<int>(rules[i].pos.size());
        for (int a : rules[i].pos)
            watchers[a].push_back(static_cast<int>(i));
        if (missing[i] == 0 && !m[rules[i].head]) {
            m[rules[i].head] = true;
            queue.push_back(rules[i].head);
        }
    }
    while (!queue.empty()) {
        int a = queue.back();
        queue.pop_back();
        for (int ri : watchers[a]) {
            if (--missing[ri] == 0) {
                int h = rules[ri].head;
                if (!m[h]) {
                    m[h] = true;
                    queue.push_back(h);
                }
            }
        }
    }
    return m;
}

bool is_model(const LogicProgram &p, const Interp &m) {
    for (const Rule &r : p.rules())
        if (body_satisfied(r, m) && !m[r.head])
            return false;
    return true;
}

bool is_answer_set(const LogicProgram &p, const Interp &m) {
    return least_model(reduct(p, m)) == m;
}

namespace {

// Sorted-atom-sequence order; the empty set comes first.
bool interp_less(const Interp &a, const Interp &b) {
    int n = static_cast<int>(a.size());
    int i = 0, j = 0;
    while (true) {
        while (i < n && !a[i])
            ++i;
        while (j < n && !b[j])
            ++j;
        if (i == n || j == n)
            return i == n && j < n;
        if (i != j)
            return i < j;
        ++i;
        ++j;
    }
}

} // namespace

std::vector<Interp> enumerate_answer_sets(const LogicProgram &p) {
    int n = p.num_atoms();
    if (n > 20)
        throw TooLarge("exhaustive answer-set enumeration is capped at 20 atoms");
    std::vector<Interp> result;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        Interp m(n, false);
        for (int a = 0; a < n; ++a)
            m[a] = (mask >> a) & 1;
        if (is_answer_set(p, m))
            result.push_back(std::move(m));
    }
    std::sort(result.begin(), result.end(), interp_less);
    return result;
}

bool is_supported(const LogicProgram &p, const Interp &m) {
    if (!is_model(p, m))
        return false;
    int n = p.num_atoms();
    std::vector<bool> has_support(n, false);
    for (const Rule &r : p.rules())
        if (body_satisfied(r, m))
            has_support[r.head] = true;
    for (int a = 0; a < n; ++a)
        if (m[a] && !has_support[a])
            return false;
    return true;
}

bool is_stratification(const LogicProgram &p, const std::vector<int> &levels) {
    if (static_cast<int>(levels.size()) != p.num_atoms())
        return false;
    for (int l : levels)
        if (l < 1)
            return false;
    for (const Rule &r : p.rules()) {
        for (int b : r.pos)
            if (levels[b] > levels[r.head])
                return false;
        for (int c : r.neg)
            if (levels[c] >= levels[r.head])
                return false;
    }
    return true;
}

namespace {

// Iterative Tarjan over an adjacency list.
std::pair<std::vector<int>, int> tarjan_sccs(const std::vector<std::vector<int>> &adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0, num_comps = 0;

    struct Frame {
        int node;
        size_t edge;
    };
    for (int start = 0; start < n; ++start) {
        if (index[start] != -1)
            continue;
        std::vector<Frame> call_stack{{start, 0}};
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!call_stack.empty()) {
            Frame &f = call_stack.back();
            if (f.edge < adj[f.node].size()) {
                int w = adj[f.node][f.edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call_stack.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.node] = std::min(low[f.node], index[w]);
                }
            } else {
                int v = f.node;
                call_stack.pop_back();
                if (!call_stack.empty())
                    low[call_stack.back().node] = std::min(low[call_stack.back().node], low[v]);
                if (low[v] == index[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = num_comps;
                        if (w == v)
                            break;
                    }
                    ++num_comps;
                }
            }
        }
    }
    return {comp, num_comps};
}

} // namespace

std::optional<std::vector<int>> find_stratification(const LogicProgram &p) {
    int n = p.num_atoms();
    // Edge (body atom -> head, weight): the head's level must be at least the
    // body atom's level, plus one when the occurrence is negative.
    std::vector<std::vector<int>> adj(n);
    std::vector<std::tuple<int, int, int>> weighted; // (from, to, weight)
    for (const Rule &r : p.rules()) {
        for (int b : r.pos) {
            adj[b].push_back(r.head);
            weighted.emplace_back(b, r.head, 0);
        }
        for (int c : r.neg) {
            adj[c].push_back(r.head);
            weighted.emplace_back(c, r.head, 1);
        }
    }
    auto [comp, num_comps] = tarjan_sccs(adj);
    for (auto [from, to, w] : weighted)
        if (w == 1 && comp[from] == comp[to])
            return std::nullopt;
    // Tarjan numbers components in reverse topological order of the edge
    // direction, so dependencies carry higher component ids.
    std::vector<int> comp_level(num_comps, 1);
    for (int c = num_comps - 1; c >= 0; --c) {
        for (auto [from, to, w] : weighted) {
            if (comp[from] == c && comp[from] != comp[to])
                comp_level[comp[to]] = std::max(comp_level[comp[to]], comp_level[c] + w);
        }
    }
    std::vector<int> levels(n, 1);
    for (int a = 0; a < n; ++a)
        levels[a] = comp_level[comp[a]];
    assert(is_stratification(p, levels));
    return levels;
}

Interp perfect_model(const LogicProgram &p) {
    auto levels = find_stratification(p);
    if (!levels)
        throw NotStratified("program admits no stratification");
    int n = p.num_atoms();
    Interp m(n, false);
    std::vector<int> distinct = *levels;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int level : distinct) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Rule &r : p.rules()) {
                if ((*levels)[r.head] != level || m[r.head])
                    continue;
                if (body_satisfied(r, m)) {
                    m[r.head] = true;
                    changed = true;
                }
            }
        }
    }
    return m;
}

std::vector<std::pair<int, int>> DependencyGraph::edge_pairs() const {
    std::vector<std::pair<int, int>> result;
    for (int a = 0; a < static_cast<int>(edges.size()); ++a)
        for (int b : edges[a])
            result.emplace_back(a, b);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

DependencyGraph dependency_graph(const LogicProgram &p) {
    int n = p.num_atoms();
    DependencyGraph dg;
    dg.edges.assign(n, {});
    for (const Rule &r : p.rules())
        for (int b : r.pos)
            dg.edges[r.head].push_back(b);
    for (auto &row : dg.edges) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    // Edges point head -> body, so a component closes only after everything it
    // depends on; Tarjan's numbering is already a dependency order.
    auto [comp, num_comps] = tarjan_sccs(dg.edges);
    dg.scc_index = comp;
    dg.sccs.assign(num_comps, {});
    for (int a = 0; a < n; ++a)
        dg.sccs[comp[a]].push_back(a);
    for (auto &members : dg.sccs)
        std::sort(members.begin(), members.end());
    return dg;
}

RuleClasses rule_classes(const LogicProgram &p, const DependencyGraph &dg, int atom) {
    RuleClasses result;
    const auto &rules = p.rules();
    for (int i = 0; i < static_cast<int>(rules.size()); ++i) {
        if (rules[i].head != atom)
            continue;
        result.def.push_back(i);
        bool internal = false;
        for (int b : rules[i].pos)
            if (dg.same_scc(atom, b)) {
                internal = true;
                break;
            }
        (internal ? result.internal : result.ext).push_back(i);
    }
    return result;
}

std::vector<int> internal_support_set(const LogicProgram &p, const DependencyGraph &dg,
                                      int atom, int rule_index) {
    std::vector<int> result;
    for (int b : p.rules()[rule_index].pos)
        if (dg.same_scc(atom, b))
            result.push_back(b);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

bool level_ranking_exists(const LogicProgram &p, const Interp &m) {
    if (!is_supported(p, m))
        throw NotSupported("level rankings are defined for supported models only");
    int true_count = 0;
    for (bool v : m)
        if (v)
            ++true_count;
    if (true_count > 15)
        throw TooLarge("level-ranking search is capped at 15 true atoms");
    // Ranks in derivation order: an atom is rankable once some support rule
    // has its whole positive body ranked. Saturation decides existence; a
    // stalled prefix can never be completed by any ranking.
    int n = p.num_atoms();
    std::vector<bool> ranked(n, false);
    int num_ranked = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule &r : p.rules()) {
            if (!m[r.head] || ranked[r.head] || !body_satisfied(r, m))
                continue;
            bool ready = true;
            for (int b : r.pos)
                if (!ranked[b]) {
                    ready = false;
                    break;
                }
            if (ready) {
                ranked[r.head] = true;
                ++num_ranked;
                changed = true;
            }
        }
    }
    return num_ranked == true_count;
}

RoundedModel perfect_model_with_rounds(const LogicProgram &p) {
    auto levels = find_stratification(p);
    if (!levels)
        throw NotStratified("program admits no stratification");
    DependencyGraph dg = dependency_graph(p);
    int n = p.num_atoms();

    // Components ordered by stratum first, positive dependencies second.
    // Levels agree inside a component because positive cycles force equality.
    std::vector<int> order(dg.sccs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return (*levels)[dg.sccs[x][0]] < (*levels)[dg.sccs[y][0]];
    });

    RoundedModel result;
    result.model.assign(n, false);
    result.rounds.assign(n, 0);
    std::vector<std::vector<int>> head_rules(n);
    const auto &rules = p.rules();
    for (int i = 0; i < static_cast<int>(rules.size()); ++i)
        head_rules[rules[i].head].push_back(i);

    for (int ci : order) {
        int round = 0;
        while (true) {
            std::vector<int> newly;
            for (int a : dg.sccs[ci]) {
                if (result.model[a])
                    continue;
                for (int ri : head_rules[a]) {
                    if (body_satisfied(rules[ri], result.model)) {
                        newly.push_back(a);
                        break;
                    }
                }
            }
            if (newly.empty())
                break;
            for (int a : newly) {
                result.model[a] = true;
                result.rounds[a] = round;
            }
            ++round;
        }
    }
    assert(result.model == perfect_model(p));
    return result;
}

} // namespace axplan
