#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>

#include "gral/label.hpp"

namespace gral {

/// A graph: a finite set of nodes plus a finite set of triples whose
/// subjects and objects are nodes. Predicates need not be nodes.
///
/// Any label kind may appear in any position. A graph with no variable
/// label is a data graph; every graph is a query graph. Construction
/// normalizes: adding a triple inserts its subject and object into the
/// node set, so the closure invariant cannot be broken.
///
/// Graphs are plain values; evaluation never mutates a shared graph.
class Graph {
public:
    Graph() = default;

    void add_node(const Label& node);
    void add_triple(const Triple& triple);
    void add_triple(const Label& s, const Label& p, const Label& o) {
        add_triple(Triple{s, p, o});
    }

    const std::set<Label>& nodes() const { return nodes_; }
    const std::set<Triple>& triples() const { return triples_; }

    /// Nodes plus predicates.
    const std::set<Label>& labels() const { return labels_; }

    /// Nodes that are neither subject nor object of any triple.
    /// Appearing as a predicate does not count.
    std::set<Label> isolated_nodes() const;

    std::set<Label> variables() const;
    std::set<Label> blanks() const;
    std::set<Label> bv_labels() const;
    std::set<std::string> blank_names() const;

    bool contains_node(const Label& n) const { return nodes_.count(n) != 0; }
    bool contains_triple(const Triple& t) const { return triples_.count(t) != 0; }
    bool contains_label(const Label& l) const { return labels_.count(l) != 0; }
    bool is_subgraph_of(const Graph& other) const;

    /// True iff no variable occurs among the labels.
    bool is_data() const;

    bool empty() const { return nodes_.empty() && triples_.empty(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.nodes_ == b.nodes_ && a.triples_ == b.triples_;
    }

private:
    std::set<Label> nodes_;
    std::set<Triple> triples_;
    std::set<Label> labels_;
};

/// Componentwise union; labels(a ∪ b) = labels(a) ∪ labels(b).
Graph union_graphs(const Graph& a, const Graph& b);

/// Componentwise intersection.
Graph intersect_graphs(const Graph& a, const Graph& b);

/// The image of a graph under a partial label function: nodes f(n) for
/// defined n, and triples whose three components are all defined.
Graph image_graph(const Graph& g,
                  const std::function<std::optional<Label>(const Label&)>& f);

/// Largest RDF graph included in a data graph: keeps triples with an IRI
/// predicate and a non-literal subject, drops everything else including
/// all isolated nodes. Throws Error on non-data input.
Graph largest_rdf_subgraph(const Graph& g);

/// The part of a graph visible to basic-pattern matching: all nodes, and
/// all triples except those carried by internal column predicates.
Graph matchable_part(const Graph& g);

/// Canonical statement-per-line text: triples first, then isolated nodes,
/// each sorted, each terminated by " .".
std::string to_text(const Graph& g);

}  // namespace gral
