#include "grlpa/parse.hpp"

#include <cctype>

namespace grlpa {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;
    int line = 1;
    int column = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_space_and_comments() {
        while (!done()) {
            if (isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else if (peek() == '#') {
                while (!done() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, column); }

    bool id_char(char c) const { return isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string identifier() {
        skip_space_and_comments();
        if (done() || !(isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail("expected an identifier");
        std::string id;
        while (!done() && id_char(peek())) {
            id += peek();
            advance();
        }
        return id;
    }

    void expect(char c, const std::string& what) {
        skip_space_and_comments();
        if (done() || peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
        advance();
    }

    bool try_consume(std::string_view word) {
        skip_space_and_comments();
        size_t save_pos = pos;
        int save_line = line, save_col = column;
        for (char c : word) {
            if (done() || peek() != c) {
                pos = save_pos;
                line = save_line;
                column = save_col;
                return false;
            }
            advance();
        }
        // keywords must not continue into an identifier
        if (!done() && id_char(peek())) {
            pos = save_pos;
            line = save_line;
            column = save_col;
            return false;
        }
        return true;
    }
};

} // namespace

GraphDoc parse_graph(std::string_view text) {
    GraphDoc doc;
    doc.source = std::string(text);
    Cursor c{text};
    for (;;) {
        c.skip_space_and_comments();
        if (c.done()) break;
        int stmt_line = c.line, stmt_col = c.column;
        if (c.try_consume("vertex")) {
            std::string id = c.identifier();
            c.expect(';', "after vertex declaration");
            try {
                doc.graph.add_vertex(id);
            } catch (const StructuralError& e) {
                throw ParseError(e.what(), stmt_line, stmt_col);
            }
        } else if (c.try_consume("edge")) {
            std::string id = c.identifier();
            c.expect(':', "after edge name");
            std::string src = c.identifier();
            c.skip_space_and_comments();
            c.expect('-', "in '->'");
            c.expect('>', "in '->'");
            std::string dst = c.identifier();
            c.expect(';', "after edge declaration");
            try {
                doc.graph.add_edge(id, src, dst);
            } catch (const StructuralError& e) {
                throw ParseError(e.what(), stmt_line, stmt_col);
            }
        } else {
            c.fail("expected 'vertex' or 'edge'");
        }
    }
    return doc;
}

LpaElement parse_element(std::string_view text, const Graph& g, const Field& f) {
    Cursor c{text};
    LpaElement acc = LpaElement::zero(g, f);
    bool first_term = true;
    for (;;) {
        c.skip_space_and_comments();
        if (c.done()) {
            if (first_term) c.fail("expected an expression");
            break;
        }
        if (!first_term) c.expect('+', "between terms");
        first_term = false;
        c.skip_space_and_comments();

        // optional coefficient
        Scalar coeff = Scalar::one(f);
        bool neg = false;
        if (!c.done() && c.peek() == '-') {
            neg = true;
            c.advance();
            c.skip_space_and_comments();
        }
        if (!c.done() && isdigit(static_cast<unsigned char>(c.peek()))) {
            std::string lit;
            while (!c.done() &&
                   (isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '/')) {
                lit += c.peek();
                c.advance();
            }
            auto parsed = Scalar::parse(f, lit);
            if (!parsed) c.fail("bad coefficient literal '" + lit + "'");
            coeff = *parsed;
        }
        if (neg) coeff = -coeff;

        // one or more factors
        LpaElement term = LpaElement::zero(g, f);
        bool have_factor = false;
        for (;;) {
            c.skip_space_and_comments();
            if (c.done() || !(isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '_'))
                break;
            int id_line = c.line, id_col = c.column;
            std::string id = c.identifier();
            bool ghost = false;
            if (!c.done() && c.peek() == '*') {
                ghost = true;
                c.advance();
            }
            LpaElement factor = LpaElement::zero(g, f);
            if (auto e = g.edge_index(id)) {
                factor = ghost ? LpaElement::ghost_edge(g, f, *e) : LpaElement::edge(g, f, *e);
            } else if (auto v = g.vertex_index(id)) {
                // vertices are selfadjoint, so a ghost marker is a no-op
                factor = LpaElement::vertex(g, f, *v);
            } else {
                throw ParseError("unknown vertex or edge '" + id + "'", id_line, id_col);
            }
            term = have_factor ? lpa_mul(term, factor) : factor;
            have_factor = true;
        }
        if (!have_factor) c.fail("expected a vertex or edge factor");
        acc = acc + term.scaled(coeff);
    }
    return acc;
}

} // namespace grlpa
