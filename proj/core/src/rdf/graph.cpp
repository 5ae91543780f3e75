#include "sesforge/rdf/graph.hpp"

#include <algorithm>
#include <limits>

namespace sesforge::rdf {

namespace {

bool agrees(const Triple& t, const std::optional<Term>& s, const std::optional<Term>& p,
            const std::optional<Term>& o) {
    return (!s || t.subject() == *s) && (!p || t.predicate() == *p) && (!o || t.object() == *o);
}

} // namespace

Graph::Graph(std::initializer_list<Triple> triples) {
    for (const auto& t : triples) insert(t);
}

bool Graph::insert(const Triple& t) {
    if (!triples_.insert(t).second) return false;
    by_subject_[t.subject()].insert(t);
    by_predicate_[t.predicate()].insert(t);
    by_object_[t.object()].insert(t);
    return true;
}

bool Graph::insert(Term subject, Term predicate, Term object) {
    return insert(Triple(std::move(subject), std::move(predicate), std::move(object)));
}

void Graph::index_erase(Index& index, const Term& key, const Triple& t) {
    auto it = index.find(key);
    if (it == index.end()) return;
    it->second.erase(t);
    if (it->second.empty()) index.erase(it);
}

bool Graph::erase(const Triple& t) {
    if (triples_.erase(t) == 0) return false;
    index_erase(by_subject_, t.subject(), t);
    index_erase(by_predicate_, t.predicate(), t);
    index_erase(by_object_, t.object(), t);
    return true;
}

std::size_t Graph::merge(const Graph& other) {
    std::size_t added = 0;
    for (const auto& t : other) added += insert(t) ? 1 : 0;
    return added;
}

void Graph::clear() {
    triples_.clear();
    by_subject_.clear();
    by_predicate_.clear();
    by_object_.clear();
}

bool Graph::contains(const Term& s, const Term& p, const Term& o) const {
    if (!s.is_iri() || !p.is_iri() || o.is_variable()) return false;
    return triples_.contains(Triple(s, p, o));
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o, IndexHint hint) const {
    static const std::set<Triple> kEmpty;

    const std::set<Triple>* source = &triples_;
    auto bucket = [&](const Index& index, const Term& key) -> const std::set<Triple>* {
        auto it = index.find(key);
        return it == index.end() ? &kEmpty : &it->second;
    };

    switch (hint) {
        case IndexHint::Subject:
            if (s) source = bucket(by_subject_, *s);
            break;
        case IndexHint::Predicate:
            if (p) source = bucket(by_predicate_, *p);
            break;
        case IndexHint::Object:
            if (o) source = bucket(by_object_, *o);
            break;
        case IndexHint::Scan:
            break;
        case IndexHint::Auto: {
            if (s) source = bucket(by_subject_, *s);
            if (p) {
                auto* b = bucket(by_predicate_, *p);
                if (b->size() < source->size()) source = b;
            }
            if (o) {
                auto* b = bucket(by_object_, *o);
                if (b->size() < source->size()) source = b;
            }
            break;
        }
    }

    std::vector<Triple> out;
    for (const auto& t : *source) {
        if (agrees(t, s, p, o)) out.push_back(t);
    }
    return out;
}

std::size_t Graph::estimate(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const {
    std::size_t best = triples_.size();
    auto narrow = [&](const Index& index, const std::optional<Term>& key) {
        if (!key) return;
        auto it = index.find(*key);
        best = std::min(best, it == index.end() ? std::size_t{0} : it->second.size());
    };
    narrow(by_subject_, s);
    narrow(by_predicate_, p);
    narrow(by_object_, o);
    return best;
}

std::vector<Term> Graph::objects(const Term& s, const Term& p) const {
    std::vector<Term> out;
    for (const auto& t : match(s, p, std::nullopt)) out.push_back(t.object());
    return out;
}

std::vector<Term> Graph::subjects(const Term& p, const Term& o) const {
    std::vector<Term> out;
    for (const auto& t : match(std::nullopt, p, o)) out.push_back(t.subject());
    return out;
}

bool Graph::indexes_consistent() const {
    auto rebuild = [&](auto key_of) {
        Index index;
        for (const auto& t : triples_) index[key_of(t)].insert(t);
        return index;
    };
    return by_subject_ == rebuild([](const Triple& t) { return t.subject(); }) &&
           by_predicate_ == rebuild([](const Triple& t) { return t.predicate(); }) &&
           by_object_ == rebuild([](const Triple& t) { return t.object(); });
}

Graph operator+(const Graph& a, const Graph& b) {
    Graph out = a;
    out.merge(b);
    return out;
}

} // namespace sesforge::rdf
