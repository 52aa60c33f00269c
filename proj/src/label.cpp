#include "gral/label.hpp"

#include <array>
#include <cctype>

namespace gral {

Label Label::iri(std::string text) {
    Label l;
    l.kind_ = Kind::Iri;
    l.text_ = std::move(text);
    return l;
}

Label Label::string(std::string text) {
    Label l;
    l.kind_ = Kind::String;
    l.text_ = std::move(text);
    return l;
}

Label Label::integer(std::int64_t value) {
    Label l;
    l.kind_ = Kind::Integer;
    l.int_ = value;
    return l;
}

Label Label::boolean(bool value) {
    Label l;
    l.kind_ = Kind::Boolean;
    l.bool_ = value;
    return l;
}

Label Label::blank(std::string name) {
    Label l;
    l.kind_ = Kind::Blank;
    l.text_ = std::move(name);
    return l;
}

Label Label::variable(std::string name) {
    Label l;
    l.kind_ = Kind::Variable;
    l.text_ = std::move(name);
    return l;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    switch (a.kind_) {
        case Label::Kind::Integer:
            return a.int_ <=> b.int_;
        case Label::Kind::Boolean:
            return a.bool_ <=> b.bool_;
        default:
            return a.text_ <=> b.text_;
    }
}

bool operator==(const Label& a, const Label& b) {
    return (a <=> b) == 0;
}

namespace {

const std::array<const char*, 16> kKeywords = {
    "SELECT", "DISTINCT", "CONSTRUCT", "WHERE",  "AND",  "UNION",
    "ALL",    "FILTER",   "BIND",      "AS",     "EXISTS", "NOT",
    "BOUND",  "CONCAT",   "TRUE",      "FALSE"};

bool is_keyword_word(const std::string& s) {
    std::string up;
    up.reserve(s.size());
    for (char c : s) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (const char* k : kKeywords)
        if (up == k) return true;
    return false;
}

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == ':' || c == '@' || c == '/';
}

// A bare IRI word: starts with a letter, continues with word characters
// or interior dots, does not end with '.', and is not a keyword.
bool bare_iri_ok(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        char c = s[i];
        if (is_word_char(c)) continue;
        if (c == '.' && i + 1 < s.size() && is_word_char(s[i + 1])) continue;
        return false;
    }
    if (s.back() == '.') return false;
    return !is_keyword_word(s);
}

std::string quote_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string to_text(const Label& label) {
    switch (label.kind()) {
        case Label::Kind::Iri:
            if (bare_iri_ok(label.text())) return label.text();
            return "<" + label.text() + ">";
        case Label::Kind::String:
            return quote_string(label.text());
        case Label::Kind::Integer:
            return std::to_string(label.integer_value());
        case Label::Kind::Boolean:
            return label.boolean_value() ? "true" : "false";
        case Label::Kind::Blank:
            return "_:" + label.text();
        case Label::Kind::Variable:
            return "?" + label.text();
    }
    return {};
}

bool is_internal_iri(const Label& label) {
    return label.is_iri() && label.text().rfind("gral:", 0) == 0;
}

Label column_predicate(const std::string& variable_name) {
    return Label::iri("gral:col/" + variable_name);
}

}  // namespace gral
