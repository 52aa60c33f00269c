#include "gral/graph.hpp"

#include "gral/span.hpp"

namespace gral {

void Graph::add_node(const Label& node) {
    nodes_.insert(node);
    labels_.insert(node);
}

void Graph::add_triple(const Triple& triple) {
    triples_.insert(triple);
    add_node(triple.subject);
    add_node(triple.object);
    labels_.insert(triple.predicate);
}

std::set<Label> Graph::isolated_nodes() const {
    std::set<Label> used;
    for (const Triple& t : triples_) {
        used.insert(t.subject);
        used.insert(t.object);
    }
    std::set<Label> out;
    for (const Label& n : nodes_)
        if (!used.count(n)) out.insert(n);
    return out;
}

std::set<Label> Graph::variables() const {
    std::set<Label> out;
    for (const Label& l : labels_)
        if (l.is_variable()) out.insert(l);
    return out;
}

std::set<Label> Graph::blanks() const {
    std::set<Label> out;
    for (const Label& l : labels_)
        if (l.is_blank()) out.insert(l);
    return out;
}

std::set<Label> Graph::bv_labels() const {
    std::set<Label> out;
    for (const Label& l : labels_)
        if (l.is_bv()) out.insert(l);
    return out;
}

std::set<std::string> Graph::blank_names() const {
    std::set<std::string> out;
    for (const Label& l : labels_)
        if (l.is_blank()) out.insert(l.text());
    return out;
}

bool Graph::is_subgraph_of(const Graph& other) const {
    for (const Label& n : nodes_)
        if (!other.contains_node(n)) return false;
    for (const Triple& t : triples_)
        if (!other.contains_triple(t)) return false;
    return true;
}

bool Graph::is_data() const {
    for (const Label& l : labels_)
        if (l.is_variable()) return false;
    return true;
}

Graph union_graphs(const Graph& a, const Graph& b) {
    Graph out = a;
    for (const Label& n : b.nodes()) out.add_node(n);
    for (const Triple& t : b.triples()) out.add_triple(t);
    return out;
}

Graph intersect_graphs(const Graph& a, const Graph& b) {
    Graph out;
    for (const Triple& t : a.triples())
        if (b.contains_triple(t)) out.add_triple(t);
    for (const Label& n : a.nodes())
        if (b.contains_node(n)) out.add_node(n);
    return out;
}

Graph image_graph(const Graph& g,
                  const std::function<std::optional<Label>(const Label&)>& f) {
    Graph out;
    for (const Label& n : g.nodes())
        if (auto v = f(n)) out.add_node(*v);
    for (const Triple& t : g.triples()) {
        auto s = f(t.subject);
        auto p = f(t.predicate);
        auto o = f(t.object);
        if (s && p && o) out.add_triple(*s, *p, *o);
    }
    return out;
}

Graph largest_rdf_subgraph(const Graph& g) {
    if (!g.is_data()) throw Error("largest_rdf_subgraph: input is not a data graph");
    Graph out;
    for (const Triple& t : g.triples()) {
        if (!t.predicate.is_iri()) continue;
        if (t.subject.is_literal()) continue;
        out.add_triple(t);
    }
    return out;
}

Graph matchable_part(const Graph& g) {
    Graph out;
    for (const Triple& t : g.triples())
        if (!is_internal_iri(t.predicate)) out.add_triple(t);
    for (const Label& n : g.nodes()) out.add_node(n);
    return out;
}

std::string to_text(const Graph& g) {
    std::string out;
    for (const Triple& t : g.triples()) {
        out += to_text(t.subject);
        out += ' ';
        out += to_text(t.predicate);
        out += ' ';
        out += to_text(t.object);
        out += " .\n";
    }
    for (const Label& n : g.isolated_nodes()) {
        out += to_text(n);
        out += " .\n";
    }
    return out;
}

}  // namespace gral
