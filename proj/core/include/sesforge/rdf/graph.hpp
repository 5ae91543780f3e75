#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "sesforge/rdf/triple.hpp"

namespace sesforge::rdf {

// Which access path match() uses. Auto picks the smallest bound bucket; the
// others exist so tests can compare every index against a full scan.
enum class IndexHint { Auto, Subject, Predicate, Object, Scan };

// A set of triples with subject, predicate, and object indexes.
//
// Iteration and match() results follow canonical (S, P, O) order. Concurrent
// readers are safe; mutation needs exclusive access.
class Graph {
public:
    using const_iterator = std::set<Triple>::const_iterator;

    Graph() = default;
    Graph(std::initializer_list<Triple> triples);

    // Returns false when the triple was already present.
    bool insert(const Triple& t);
    bool insert(Term subject, Term predicate, Term object);
    bool erase(const Triple& t);
    // Inserts every triple of `other`; returns the number actually added.
    std::size_t merge(const Graph& other);
    void clear();

    bool contains(const Triple& t) const { return triples_.contains(t); }
    bool contains(const Term& s, const Term& p, const Term& o) const;

    std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                              const std::optional<Term>& o, IndexHint hint = IndexHint::Auto) const;
    // Upper bound on match() size from bucket sizes, without materializing.
    std::size_t estimate(const std::optional<Term>& s, const std::optional<Term>& p,
                         const std::optional<Term>& o) const;

    // Objects of (s, p, *) in order.
    std::vector<Term> objects(const Term& s, const Term& p) const;
    // Subjects of (*, p, o) in order.
    std::vector<Term> subjects(const Term& p, const Term& o) const;
    bool has_subject(const Term& s) const { return by_subject_.contains(s); }
    // True when the term occurs in subject or object position.
    bool mentions(const Term& t) const { return by_subject_.contains(t) || by_object_.contains(t); }

    std::size_t size() const noexcept { return triples_.size(); }
    bool empty() const noexcept { return triples_.empty(); }
    const_iterator begin() const noexcept { return triples_.begin(); }
    const_iterator end() const noexcept { return triples_.end(); }

    // Recomputes every index from the triple set and compares.
    bool indexes_consistent() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

private:
    using Index = std::unordered_map<Term, std::set<Triple>>;

    static void index_erase(Index& index, const Term& key, const Triple& t);

    std::set<Triple> triples_;
    Index by_subject_;
    Index by_predicate_;
    Index by_object_;
};

// Union of two graphs as a new value.
Graph operator+(const Graph& a, const Graph& b);

} // namespace sesforge::rdf
