#include "sesforge/store/query.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "sesforge/io/turtle.hpp"
#include "sesforge/rdf/vocab.hpp"

namespace sesforge::store {

using rdf::Term;

std::vector<std::string> QueryPattern::variables() const {
    std::set<std::string> names;
    for (const auto& p : patterns) {
        for (const Term* t : {&p.subject, &p.predicate, &p.object}) {
            if (t->is_variable()) names.insert(t->value());
        }
    }
    return {names.begin(), names.end()};
}

std::string BindingSet::to_tsv(const rdf::PrefixMap& pm) const {
    std::string out;
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (i) out += '\t';
        out += '?' + variables[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < variables.size(); ++i) {
            if (i) out += '\t';
            out += io::turtle_term(row.at(variables[i]), pm);
        }
        out += '\n';
    }
    return out;
}

namespace {

class QueryLexer {
public:
    QueryLexer(std::string_view text, const rdf::PrefixMap& pm) : text_(text), pm_(pm) {}

    QueryPattern run() {
        QueryPattern q;
        std::vector<Term> terms;
        auto flush = [&] {
            if (terms.empty()) return;
            if (terms.size() != 3) {
                fail("expected subject, predicate and object, got " + std::to_string(terms.size()) +
                     " term(s)");
            }
            if (terms[0].is_literal()) fail("literal in subject position");
            if (terms[1].is_literal()) fail("literal in predicate position");
            q.patterns.push_back({terms[0], terms[1], terms[2]});
            terms.clear();
        };
        while (true) {
            skip_blanks();
            if (pos_ >= text_.size()) break;
            const char c = text_[pos_];
            if (c == '\n') {
                flush();
                ++pos_;
                ++line_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '.' && (pos_ + 1 == text_.size() || is_space(text_[pos_ + 1]))) {
                flush();
                ++pos_;
            } else {
                terms.push_back(term());
            }
        }
        flush();
        if (q.patterns.empty()) throw ParseError("query has no triple patterns", 0);
        return q;
    }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_); }

    void skip_blanks() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
    }

    std::string_view word() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
        std::string_view w = text_.substr(start, pos_ - start);
        // A trailing '.' ends the pattern unless it is part of the word itself.
        if (w.size() > 1 && w.back() == '.' && w[0] != '<') {
            --pos_;
            w.remove_suffix(1);
        }
        return w;
    }

    Term resolve(std::string_view w) {
        try {
            if (w.starts_with('<')) {
                if (!w.ends_with('>')) fail("unterminated IRI");
                return Term::iri(std::string(w.substr(1, w.size() - 2)));
            }
            if (w.find(':') != std::string_view::npos) return pm_.expand(w);
            if (!rdf::is_valid_local(w)) fail("cannot read term '" + std::string(w) + "'");
            return Term::iri(pm_.namespace_of("sescore").value_or("") + std::string(w));
        } catch (const PrefixError& e) {
            fail(e.what());
        } catch (const TermError& e) {
            fail(e.what());
        }
    }

    Term term() {
        const char c = text_[pos_];
        if (c == '"') return literal();
        if (c == '<') {
            const auto close = text_.find('>', pos_);
            if (close == std::string_view::npos) fail("unterminated IRI");
            std::string_view w = text_.substr(pos_, close - pos_ + 1);
            pos_ = close + 1;
            return resolve(w);
        }
        std::string_view w = word();
        if (w == "a") return rdf::vocab::rdf_type();
        if (w.starts_with('?')) {
            try {
                return Term::variable(std::string(w.substr(1)));
            } catch (const TermError& e) {
                fail(e.what());
            }
        }
        return resolve(w);
    }

    Term literal() {
        ++pos_;
        std::string lexical;
        while (true) {
            if (pos_ >= text_.size() || text_[pos_] == '\n') fail("unterminated string literal");
            const char c = text_[pos_++];
            if (c == '"') break;
            if (c != '\\') {
                lexical += c;
                continue;
            }
            if (pos_ >= text_.size()) fail("unterminated string literal");
            switch (const char e = text_[pos_++]) {
                case 'n': lexical += '\n'; break;
                case 't': lexical += '\t'; break;
                case 'r': lexical += '\r'; break;
                case '"': lexical += '"'; break;
                case '\\': lexical += '\\'; break;
                default: fail(std::string("unsupported escape '\\") + e + "'");
            }
        }
        if (pos_ < text_.size() && text_[pos_] == '@') {
            ++pos_;
            std::string_view tag = word();
            try {
                return Term::lang_literal(std::move(lexical), std::string(tag));
            } catch (const TermError& e) {
                fail(e.what());
            }
        }
        if (text_.substr(pos_).starts_with("^^")) {
            pos_ += 2;
            if (pos_ >= text_.size() || is_space(text_[pos_])) fail("missing datatype");
            Term dt = text_[pos_] == '<' ? term() : resolve(word());
            return Term::typed_literal(std::move(lexical), dt.value());
        }
        return Term::literal(std::move(lexical));
    }

    std::string_view text_;
    const rdf::PrefixMap& pm_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

using Partial = std::vector<std::optional<Term>>;  // indexed like BindingSet::variables

std::optional<Term> bound(const Term& t, const Partial& row, const std::vector<std::string>& vars) {
    if (!t.is_variable()) return t;
    auto it = std::lower_bound(vars.begin(), vars.end(), t.value());
    return row[static_cast<std::size_t>(it - vars.begin())];
}

// Binds `pattern` to `value` in `row`; false on a conflicting earlier binding.
bool bind(const Term& pattern, const Term& value, Partial& row, const std::vector<std::string>& vars) {
    if (!pattern.is_variable()) return true;
    auto& slot = row[static_cast<std::size_t>(
        std::lower_bound(vars.begin(), vars.end(), pattern.value()) - vars.begin())];
    if (slot) return *slot == value;
    slot = value;
    return true;
}

} // namespace

QueryPattern parse_query(std::string_view text, const rdf::PrefixMap& pm) {
    return QueryLexer(text, pm).run();
}

BindingSet bgp_query(const rdf::Graph& g, const QueryPattern& q) {
    BindingSet result;
    result.variables = q.variables();
    const auto& vars = result.variables;
    if (q.patterns.empty()) return result;

    auto constant = [](const Term& t) -> std::optional<Term> {
        if (t.is_variable()) return std::nullopt;
        return t;
    };

    // Seed with the most selective pattern, then the rest in the given order.
    std::size_t seed = 0;
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < q.patterns.size(); ++i) {
        const auto& p = q.patterns[i];
        const std::size_t est = g.estimate(constant(p.subject), constant(p.predicate), constant(p.object));
        if (est < best) {
            best = est;
            seed = i;
        }
    }
    std::vector<const TriplePattern*> order{&q.patterns[seed]};
    for (std::size_t i = 0; i < q.patterns.size(); ++i) {
        if (i != seed) order.push_back(&q.patterns[i]);
    }

    std::vector<Partial> rows{Partial(vars.size())};
    for (const TriplePattern* p : order) {
        std::vector<Partial> next;
        for (const auto& row : rows) {
            const auto s = bound(p->subject, row, vars);
            const auto pr = bound(p->predicate, row, vars);
            const auto o = bound(p->object, row, vars);
            // A literal bound into subject or predicate position matches nothing.
            if ((s && !s->is_iri()) || (pr && !pr->is_iri())) continue;
            for (const auto& t : g.match(s, pr, o)) {
                Partial extended = row;
                if (bind(p->subject, t.subject(), extended, vars) &&
                    bind(p->predicate, t.predicate(), extended, vars) &&
                    bind(p->object, t.object(), extended, vars)) {
                    next.push_back(std::move(extended));
                }
            }
        }
        rows = std::move(next);
        if (rows.empty()) break;
    }

    std::vector<std::vector<Term>> flat;
    flat.reserve(rows.size());
    for (auto& row : rows) {
        std::vector<Term> r;
        r.reserve(row.size());
        for (auto& v : row) r.push_back(std::move(*v));
        flat.push_back(std::move(r));
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    for (auto& r : flat) {
        Row named;
        for (std::size_t i = 0; i < vars.size(); ++i) named.emplace(vars[i], std::move(r[i]));
        result.rows.push_back(std::move(named));
    }
    return result;
}

BindingSet bgp_query(const Registry& reg, const QueryPattern& q) {
    return bgp_query(reg.union_graph(), q);
}

} // namespace sesforge::store
