#include "shaclgap/rdf/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace shaclgap::rdf {

namespace {

bool has_blank(const Triple& t) { return t.subject.is_blank() || t.object.is_blank(); }

// Blank-node-independent description of one incidence, used to prune the
// candidate sets before backtracking.
std::string signature(const Graph& g, const Term& node) {
    std::vector<std::string> parts;
    for (const auto& t : g.triples()) {
        if (t.subject == node)
            parts.push_back("S " + to_string(t.predicate) + " " +
                            (t.object.is_blank() ? "*" : to_string(t.object)) +
                            (t.object == node ? " self" : ""));
        if (t.object == node && t.subject != node)
            parts.push_back("O " + (t.subject.is_blank() ? "*" : to_string(t.subject)) + " " +
                            to_string(t.predicate));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) {
        out += p;
        out += '\n';
    }
    return out;
}

std::vector<Term> blank_nodes(const Graph& g) {
    std::set<Term> found;
    for (const auto& t : g.triples()) {
        if (t.subject.is_blank()) found.insert(t.subject);
        if (t.object.is_blank()) found.insert(t.object);
    }
    return {found.begin(), found.end()};
}

struct Matcher {
    const Graph& a;
    const Graph& b;
    std::vector<Term> a_blanks;
    std::unordered_map<Term, std::vector<Term>, TermHash> candidates;
    std::unordered_map<Term, Term, TermHash> mapping;
    std::set<Term> used;

    bool triples_consistent() const {
        for (const auto& t : a.triples()) {
            if (!has_blank(t)) continue;
            Term s = t.subject;
            Term o = t.object;
            if (s.is_blank()) {
                auto it = mapping.find(s);
                if (it == mapping.end()) continue;
                s = it->second;
            }
            if (o.is_blank()) {
                auto it = mapping.find(o);
                if (it == mapping.end()) continue;
                o = it->second;
            }
            if (!b.contains({s, t.predicate, o})) return false;
        }
        return true;
    }

    bool assign(std::size_t i) {
        if (i == a_blanks.size()) return triples_consistent();
        const Term& node = a_blanks[i];
        for (const Term& cand : candidates.at(node)) {
            if (used.count(cand)) continue;
            mapping.emplace(node, cand);
            used.insert(cand);
            // Prune early on the triples this assignment completes.
            if (triples_consistent() && assign(i + 1)) return true;
            mapping.erase(node);
            used.erase(cand);
        }
        return false;
    }
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return false;

    for (const auto& t : a.triples())
        if (!has_blank(t) && !b.contains(t)) return false;
    for (const auto& t : b.triples())
        if (!has_blank(t) && !a.contains(t)) return false;

    auto a_blanks = blank_nodes(a);
    auto b_blanks = blank_nodes(b);
    if (a_blanks.size() != b_blanks.size()) return false;
    if (a_blanks.empty()) return true;

    std::unordered_map<Term, std::string, TermHash> b_sigs;
    for (const auto& n : b_blanks) b_sigs.emplace(n, signature(b, n));

    Matcher m{a, b, std::move(a_blanks), {}, {}, {}};
    std::multiset<std::string> a_sig_set;
    std::multiset<std::string> b_sig_set;
    for (const auto& [_, sig] : b_sigs) b_sig_set.insert(sig);
    for (const auto& n : m.a_blanks) {
        std::string sig = signature(a, n);
        a_sig_set.insert(sig);
        auto& cands = m.candidates[n];
        for (const auto& bn : b_sigs)
            if (bn.second == sig) cands.push_back(bn.first);
        if (cands.empty()) return false;
    }
    if (a_sig_set != b_sig_set) return false;

    // Most-constrained nodes first.
    std::stable_sort(m.a_blanks.begin(), m.a_blanks.end(), [&](const Term& x, const Term& y) {
        return m.candidates.at(x).size() < m.candidates.at(y).size();
    });
    return m.assign(0);
}

}  // namespace shaclgap::rdf
