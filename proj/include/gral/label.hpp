#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gral {

/// A label of a graph: an IRI, a literal (string, integer or boolean),
/// a blank, or a variable.
///
/// IRIs and literals are the constants: every mapping fixes them.
/// Blanks and variables can be instantiated by mappings.
///
/// Labels are totally ordered: Iri < String < Integer < Boolean < Blank <
/// Variable, then by value within a kind. The order is used for
/// deterministic serialization only, never for semantics.
class Label {
public:
    enum class Kind { Iri, String, Integer, Boolean, Blank, Variable };

    Label() : kind_(Kind::Iri) {}

    static Label iri(std::string text);
    static Label string(std::string text);
    static Label integer(std::int64_t value);
    static Label boolean(bool value);
    static Label blank(std::string name);
    static Label variable(std::string name);

    Kind kind() const { return kind_; }

    bool is_iri() const { return kind_ == Kind::Iri; }
    bool is_blank() const { return kind_ == Kind::Blank; }
    bool is_variable() const { return kind_ == Kind::Variable; }
    bool is_literal() const {
        return kind_ == Kind::String || kind_ == Kind::Integer ||
               kind_ == Kind::Boolean;
    }
    /// IRIs and literals together.
    bool is_constant() const { return is_iri() || is_literal(); }
    /// Blanks and variables together: the labels a mapping may bind.
    bool is_bv() const { return is_blank() || is_variable(); }

    /// IRI text, string value, or blank/variable name.
    const std::string& text() const { return text_; }
    std::int64_t integer_value() const { return int_; }
    bool boolean_value() const { return bool_; }

    friend std::strong_ordering operator<=>(const Label& a, const Label& b);
    friend bool operator==(const Label& a, const Label& b);

private:
    Kind kind_;
    std::string text_;
    std::int64_t int_ = 0;
    bool bool_ = false;
};

/// Canonical token form: bare word or <...> for IRIs, "..." for strings,
/// decimal integers, true/false, _:name, ?name.
std::string to_text(const Label& label);

/// IRIs under the "gral:" prefix are reserved for engine plumbing and are
/// rejected by the parsers.
bool is_internal_iri(const Label& label);

/// The column predicate linking a row-identifier blank to the value of a
/// projected variable.
Label column_predicate(const std::string& variable_name);

struct Triple {
    Label subject;
    Label predicate;
    Label object;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

}  // namespace gral
