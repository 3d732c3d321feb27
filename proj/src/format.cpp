#include "cmpd/format.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

namespace cmpd {

const Graph& CmpDocument::any_graph() const {
    switch (kind) {
    case DocKind::Graph:
        return graph;
    case DocKind::ReflexiveGraph:
        return rgraph.base;
    case DocKind::Computad:
        return computad.base;
    case DocKind::GroupoidalComputad:
        return gcomputad.base;
    case DocKind::Computad3:
        return computad3.base.base.base;
    default:
        fail(Errc::Internal, "document has no underlying graph");
    }
}

const char* kind_name(DocKind k) {
    switch (k) {
    case DocKind::Graph:
        return "graph";
    case DocKind::ReflexiveGraph:
        return "reflexive-graph";
    case DocKind::Computad:
        return "computad";
    case DocKind::GroupoidalComputad:
        return "groupoidal-computad";
    case DocKind::Computad3:
        return "computad3";
    case DocKind::Table:
        return "table";
    case DocKind::PresentationMonoid:
        return "presentation-monoid";
    case DocKind::PresentationGroup:
        return "presentation-group";
    }
    return "?";
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void unresolved(int line, const std::string& msg) {
    fail(Errc::UnresolvedReference, "line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

struct Line {
    int no;
    std::string text;
};

bool is_id_token(const std::string& tok) {
    return tok.size() > 3 && tok.substr(0, 3) == "id(" && tok.back() == ')';
}

std::string id_token_body(const std::string& tok) {
    return tok.substr(3, tok.size() - 4);
}

// arrow token with optional ^-1 suffix
std::pair<std::string, int> signed_token(const std::string& tok) {
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1")
        return {tok.substr(0, tok.size() - 3), -1};
    return {tok, +1};
}

Path parse_path(const Graph& g, const std::string& text, int line) {
    auto toks = split_ws(text);
    if (toks.empty())
        parse_fail(line, "empty path");
    if (toks.size() == 1 && is_id_token(toks[0])) {
        int o = g.object_index(id_token_body(toks[0]));
        if (o < 0)
            unresolved(line, "unknown object '" + id_token_body(toks[0]) + "'");
        return identity_path(o);
    }
    Path p;
    for (size_t i = 0; i < toks.size(); ++i) {
        auto [name, sign] = signed_token(toks[i]);
        if (sign < 0)
            parse_fail(line, "inverse letter in a plain path");
        int a = g.arrow_index(name);
        if (a < 0)
            unresolved(line, "unknown arrow '" + name + "'");
        if (i == 0)
            p.start = g.arrows[a].dom;
        p.arrows.push_back(a);
    }
    if (!path_valid(g, p))
        parse_fail(line, "path does not compose");
    return p;
}

Walk parse_walk(const Graph& g, const std::string& text, int line) {
    auto toks = split_ws(text);
    if (toks.empty())
        parse_fail(line, "empty walk");
    if (toks.size() == 1 && is_id_token(toks[0])) {
        int o = g.object_index(id_token_body(toks[0]));
        if (o < 0)
            unresolved(line, "unknown object '" + id_token_body(toks[0]) + "'");
        return Walk{o, {}};
    }
    std::vector<Letter> letters;
    int start = -1;
    for (size_t i = 0; i < toks.size(); ++i) {
        auto [name, sign] = signed_token(toks[i]);
        int a = g.arrow_index(name);
        if (a < 0)
            unresolved(line, "unknown arrow '" + name + "'");
        Letter l{a, sign};
        if (i == 0)
            start = letter_source(g, l);
        letters.push_back(l);
    }
    try {
        return reduce_walk(g, start, std::move(letters));
    } catch (const Error&) {
        parse_fail(line, "walk does not compose");
    }
}

TwoCellWord parse_2word(const ReflexiveComputad2& c, const std::string& text, int line) {
    const Graph& g = c.base.base;
    std::string body = trim(text);
    TwoCellWord w;
    if (body.size() > 3 && body.substr(0, 3) == "id(" && body.back() == ')') {
        std::string inner = body.substr(3, body.size() - 4);
        w.anchor = parse_path(g, inner, line);
        return w;
    }
    for (const std::string& raw : split_on(body, ';')) {
        std::string f = trim(raw);
        if (f.empty() || f.front() != '[' || f.back() != ']')
            parse_fail(line, "factor must be [ <path> | <gen> | <path> ]");
        auto parts = split_on(f.substr(1, f.size() - 2), '|');
        if (parts.size() != 3)
            parse_fail(line, "factor must have three | separated parts");
        WhiskerFactor factor;
        factor.left = parse_path(g, trim(parts[0]), line);
        auto [gen_name, sign] = signed_token(trim(parts[1]));
        int gen = c.cell_index(gen_name);
        if (gen < 0)
            unresolved(line, "unknown 2-cell '" + gen_name + "'");
        factor.gen = gen;
        factor.exp = sign;
        factor.right = parse_path(g, trim(parts[2]), line);
        w.factors.push_back(std::move(factor));
    }
    return w;
}

struct RawCell {
    int line;
    std::string name;
    std::string lhs;
    std::string rhs;
};

} // namespace

CmpDocument parse_cmp(const std::string& text) {
    std::vector<Line> lines;
    {
        std::istringstream in(text);
        std::string raw;
        int no = 0;
        while (std::getline(in, raw)) {
            ++no;
            auto hash = raw.find('#');
            if (hash != std::string::npos)
                raw = raw.substr(0, hash);
            raw = trim(raw);
            if (!raw.empty())
                lines.push_back(Line{no, raw});
        }
    }

    // pass 1: kind
    std::optional<DocKind> kind;
    bool has_cell3 = false, has_cell2 = false, has_identity = false, has_table = false, has_gen = false;
    bool has_inverse_cell2 = false, has_inverse_rel = false;
    for (const auto& ln : lines) {
        auto toks = split_ws(ln.text);
        const std::string& head = toks[0];
        if (head == "kind") {
            if (toks.size() != 2)
                parse_fail(ln.no, "kind takes one argument");
            for (DocKind k : {DocKind::Graph, DocKind::ReflexiveGraph, DocKind::Computad, DocKind::GroupoidalComputad,
                              DocKind::Computad3, DocKind::Table, DocKind::PresentationMonoid,
                              DocKind::PresentationGroup})
                if (toks[1] == kind_name(k))
                    kind = k;
            if (!kind)
                parse_fail(ln.no, "unknown kind '" + toks[1] + "'");
        } else if (head == "cell3") {
            has_cell3 = true;
        } else if (head == "cell2") {
            has_cell2 = true;
            if (ln.text.find("^-1") != std::string::npos)
                has_inverse_cell2 = true;
        } else if (head == "identity") {
            has_identity = true;
        } else if (head == "mor" || head == "comp") {
            has_table = true;
        } else if (head == "generator") {
            has_gen = true;
        } else if (head == "relation") {
            if (ln.text.find("^-1") != std::string::npos)
                has_inverse_rel = true;
        }
    }
    if (!kind) {
        if (has_cell3)
            kind = DocKind::Computad3;
        else if (has_inverse_cell2)
            kind = DocKind::GroupoidalComputad;
        else if (has_cell2)
            kind = DocKind::Computad;
        else if (has_table)
            kind = DocKind::Table;
        else if (has_gen)
            kind = has_inverse_rel ? DocKind::PresentationGroup : DocKind::PresentationMonoid;
        else if (has_identity)
            kind = DocKind::ReflexiveGraph;
        else
            kind = DocKind::Graph;
    }

    CmpDocument doc;
    doc.kind = *kind;

    // pass 2: build
    Graph g;
    std::vector<std::pair<int, int>> identities; // (object, arrow)
    std::vector<RawCell> raw2, raw3;
    FiniteCategoryTable table;
    std::vector<std::tuple<int, std::string, std::string, std::string>> raw_comp; // line, f, g, h
    PresentationDecl pres;
    pres.group = doc.kind == DocKind::PresentationGroup;

    for (const auto& ln : lines) {
        auto toks = split_ws(ln.text);
        const std::string& head = toks[0];
        if (head == "kind") {
            continue;
        } else if (head == "pattern") {
            if (toks.size() != 2)
                parse_fail(ln.no, "pattern takes one argument");
            if (toks[1] == "nat")
                doc.pattern = TotalOrderPattern::Nat;
            else if (toks[1] == "natop")
                doc.pattern = TotalOrderPattern::OpNat;
            else if (toks[1] == "int")
                doc.pattern = TotalOrderPattern::Int;
            else
                parse_fail(ln.no, "pattern must be nat, natop or int");
        } else if (head == "object") {
            if (toks.size() != 2)
                parse_fail(ln.no, "object takes one identifier");
            if (doc.kind == DocKind::Table)
                table.objects.push_back(toks[1]);
            else
                g.add_object(toks[1]);
        } else if (head == "arrow") {
            std::vector<std::string> t = toks;
            t.erase(t.begin());
            // <id> : <src> -> <tgt>
            if (t.size() != 5 || t[1] != ":" || t[3] != "->")
                parse_fail(ln.no, "expected 'arrow <id> : <src> -> <tgt>'");
            int d = g.object_index(t[2]);
            int c2 = g.object_index(t[4]);
            if (d < 0 || c2 < 0)
                unresolved(ln.no, "arrow endpoints must be declared objects");
            g.add_arrow(t[0], d, c2);
        } else if (head == "identity") {
            // identity <id> : <obj>
            if (toks.size() != 4 || toks[2] != ":")
                parse_fail(ln.no, "expected 'identity <id> : <obj>'");
            int o = g.object_index(toks[3]);
            if (o < 0)
                unresolved(ln.no, "unknown object '" + toks[3] + "'");
            int a = g.add_arrow(toks[1], o, o);
            identities.emplace_back(o, a);
        } else if (head == "cell2" || head == "cell3") {
            // cellN <id> : <lhs> => <rhs>
            auto colon = ln.text.find(':');
            auto arrow = ln.text.find("=>");
            if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
                parse_fail(ln.no, "expected 'cell <id> : <lhs> => <rhs>'");
            auto name_toks = split_ws(ln.text.substr(head.size(), colon - head.size()));
            if (name_toks.size() != 1)
                parse_fail(ln.no, "cell needs exactly one identifier");
            RawCell rc{ln.no, name_toks[0], trim(ln.text.substr(colon + 1, arrow - colon - 1)),
                       trim(ln.text.substr(arrow + 2))};
            (head == "cell2" ? raw2 : raw3).push_back(std::move(rc));
        } else if (head == "mor") {
            std::vector<std::string> t = toks;
            t.erase(t.begin());
            if (t.size() != 5 || t[1] != ":" || t[3] != "->")
                parse_fail(ln.no, "expected 'mor <id> : <src> -> <tgt>'");
            int d = -1, c2 = -1;
            for (size_t i = 0; i < table.objects.size(); ++i) {
                if (table.objects[i] == t[2])
                    d = static_cast<int>(i);
                if (table.objects[i] == t[4])
                    c2 = static_cast<int>(i);
            }
            if (d < 0 || c2 < 0)
                unresolved(ln.no, "morphism endpoints must be declared objects");
            table.morphisms.push_back(FiniteCategoryTable::Mor{t[0], d, c2});
        } else if (head == "id") {
            // id <obj> = <mor>
            if (toks.size() != 4 || toks[2] != "=")
                parse_fail(ln.no, "expected 'id <obj> = <mor>'");
            raw_comp.emplace_back(ln.no, "id", toks[1], toks[3]);
        } else if (head == "comp") {
            // comp <f> <g> = <h>
            if (toks.size() != 5 || toks[3] != "=")
                parse_fail(ln.no, "expected 'comp <f> <g> = <h>'");
            raw_comp.emplace_back(ln.no, toks[1], toks[2], toks[4]);
        } else if (head == "generator") {
            if (toks.size() != 2)
                parse_fail(ln.no, "generator takes one identifier");
            pres.generators.push_back(toks[1]);
        } else if (head == "relation") {
            auto eq = ln.text.find('=');
            if (eq == std::string::npos)
                parse_fail(ln.no, "expected 'relation <word> = <word>'");
            auto parse_word = [&](const std::string& s) {
                SignedWord w;
                for (const auto& tok : split_ws(s)) {
                    if (tok == "1")
                        continue;
                    auto [name, sign] = signed_token(tok);
                    if (sign < 0 && !pres.group)
                        parse_fail(ln.no, "inverse letter in a monoid relation");
                    w.emplace_back(name, sign);
                }
                return w;
            };
            pres.relations.emplace_back(parse_word(ln.text.substr(8, eq - 8)), parse_word(ln.text.substr(eq + 1)));
        } else {
            parse_fail(ln.no, "unknown directive '" + head + "'");
        }
    }

    switch (doc.kind) {
    case DocKind::Graph:
        doc.graph = std::move(g);
        break;
    case DocKind::ReflexiveGraph:
    case DocKind::Computad3: {
        ReflexiveGraph rg;
        rg.base = g;
        rg.identity_arrow.assign(g.num_objects(), -1);
        for (auto [o, a] : identities)
            rg.identity_arrow[o] = a;
        // free reflexive structure when no identities were declared
        for (int o = 0; o < rg.base.num_objects(); ++o)
            if (rg.identity_arrow[o] < 0)
                rg.identity_arrow[o] = rg.base.add_arrow("id_" + rg.base.objects[o], o, o);
        if (doc.kind == DocKind::ReflexiveGraph) {
            doc.rgraph = std::move(rg);
            break;
        }
        doc.computad3.base.base = std::move(rg);
        for (const auto& rc : raw2)
            doc.computad3.base.cells.push_back(PathCell{
                rc.name, parse_path(doc.computad3.base.base.base, rc.lhs, rc.line),
                parse_path(doc.computad3.base.base.base, rc.rhs, rc.line)});
        normalize_reflexive(doc.computad3.base);
        for (const auto& rc : raw3)
            doc.computad3.cells3.push_back(ThreeCell{rc.name, parse_2word(doc.computad3.base, rc.lhs, rc.line),
                                                     parse_2word(doc.computad3.base, rc.rhs, rc.line)});
        break;
    }
    case DocKind::Computad: {
        doc.computad.base = std::move(g);
        for (const auto& rc : raw2)
            doc.computad.cells.push_back(PathCell{rc.name, parse_path(doc.computad.base, rc.lhs, rc.line),
                                                  parse_path(doc.computad.base, rc.rhs, rc.line)});
        break;
    }
    case DocKind::GroupoidalComputad: {
        doc.gcomputad.base = std::move(g);
        for (const auto& rc : raw2)
            doc.gcomputad.cells.push_back(WalkCell{rc.name, parse_walk(doc.gcomputad.base, rc.lhs, rc.line),
                                                   parse_walk(doc.gcomputad.base, rc.rhs, rc.line)});
        break;
    }
    case DocKind::Table: {
        table.identity.assign(table.objects.size(), -1);
        int n = static_cast<int>(table.morphisms.size());
        table.then_table.assign(n, std::vector<int>(n, -1));
        for (auto& [no, f, gg, h] : raw_comp) {
            if (f == "id") {
                int o = -1;
                for (size_t i = 0; i < table.objects.size(); ++i)
                    if (table.objects[i] == gg)
                        o = static_cast<int>(i);
                int m = table.morphism_index(h);
                if (o < 0 || m < 0)
                    unresolved(no, "unknown object or morphism in id line");
                table.identity[o] = m;
            } else {
                int fi = table.morphism_index(f);
                int gi = table.morphism_index(gg);
                int hi = table.morphism_index(h);
                if (fi < 0 || gi < 0 || hi < 0)
                    unresolved(no, "unknown morphism in comp line");
                table.then_table[fi][gi] = hi;
            }
        }
        doc.table = std::move(table);
        break;
    }
    case DocKind::PresentationMonoid:
    case DocKind::PresentationGroup:
        doc.presentation = std::move(pres);
        break;
    }
    return doc;
}

CmpDocument parse_cmp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_cmp(ss.str());
    } catch (const Error& e) {
        fail(e.code(), path + ": " + e.what());
    }
}

namespace {

void print_graph_lines(std::ostream& out, const Graph& g, const std::vector<int>* identities) {
    for (const auto& o : g.objects)
        out << "object " << o << "\n";
    std::vector<char> is_id(g.arrows.size(), 0);
    std::vector<int> id_obj(g.arrows.size(), -1);
    if (identities)
        for (size_t o = 0; o < identities->size(); ++o) {
            is_id[(*identities)[o]] = 1;
            id_obj[(*identities)[o]] = static_cast<int>(o);
        }
    for (size_t a = 0; a < g.arrows.size(); ++a) {
        if (is_id[a])
            out << "identity " << g.arrows[a].name << " : " << g.objects[id_obj[a]] << "\n";
        else
            out << "arrow " << g.arrows[a].name << " : " << g.objects[g.arrows[a].dom] << " -> "
                << g.objects[g.arrows[a].cod] << "\n";
    }
}

} // namespace

std::string print_cmp(const CmpDocument& doc) {
    std::ostringstream out;
    out << "kind " << kind_name(doc.kind) << "\n";
    if (doc.pattern) {
        out << "pattern ";
        switch (*doc.pattern) {
        case TotalOrderPattern::Nat:
            out << "nat";
            break;
        case TotalOrderPattern::OpNat:
            out << "natop";
            break;
        case TotalOrderPattern::Int:
            out << "int";
            break;
        }
        out << "\n";
    }
    switch (doc.kind) {
    case DocKind::Graph:
        print_graph_lines(out, doc.graph, nullptr);
        break;
    case DocKind::ReflexiveGraph:
        print_graph_lines(out, doc.rgraph.base, &doc.rgraph.identity_arrow);
        break;
    case DocKind::Computad:
        print_graph_lines(out, doc.computad.base, nullptr);
        for (const auto& c : doc.computad.cells)
            out << "cell2 " << c.name << " : " << path_to_string(doc.computad.base, c.src) << " => "
                << path_to_string(doc.computad.base, c.tgt) << "\n";
        break;
    case DocKind::GroupoidalComputad:
        print_graph_lines(out, doc.gcomputad.base, nullptr);
        for (const auto& c : doc.gcomputad.cells)
            out << "cell2 " << c.name << " : " << walk_to_string(doc.gcomputad.base, c.src) << " => "
                << walk_to_string(doc.gcomputad.base, c.tgt) << "\n";
        break;
    case DocKind::Computad3: {
        const auto& base = doc.computad3.base;
        print_graph_lines(out, base.base.base, &base.base.identity_arrow);
        for (const auto& c : base.cells)
            out << "cell2 " << c.name << " : " << path_to_string(base.base.base, c.src) << " => "
                << path_to_string(base.base.base, c.tgt) << "\n";
        for (const auto& c : doc.computad3.cells3)
            out << "cell3 " << c.name << " : " << word_to_string(base, c.src) << " => "
                << word_to_string(base, c.tgt) << "\n";
        break;
    }
    case DocKind::Table:
        for (const auto& o : doc.table.objects)
            out << "object " << o << "\n";
        for (const auto& m : doc.table.morphisms)
            out << "mor " << m.name << " : " << doc.table.objects[m.dom] << " -> " << doc.table.objects[m.cod]
                << "\n";
        for (size_t o = 0; o < doc.table.objects.size(); ++o)
            if (doc.table.identity[o] >= 0)
                out << "id " << doc.table.objects[o] << " = " << doc.table.morphisms[doc.table.identity[o]].name
                    << "\n";
        for (size_t f = 0; f < doc.table.morphisms.size(); ++f)
            for (size_t g2 = 0; g2 < doc.table.morphisms.size(); ++g2)
                if (doc.table.then_table[f][g2] >= 0)
                    out << "comp " << doc.table.morphisms[f].name << " " << doc.table.morphisms[g2].name << " = "
                        << doc.table.morphisms[doc.table.then_table[f][g2]].name << "\n";
        break;
    case DocKind::PresentationMonoid:
    case DocKind::PresentationGroup: {
        for (const auto& g2 : doc.presentation.generators)
            out << "generator " << g2 << "\n";
        auto word = [](const SignedWord& w) {
            if (w.empty())
                return std::string("1");
            std::string s;
            for (size_t i = 0; i < w.size(); ++i) {
                if (i)
                    s += ' ';
                s += w[i].first;
                if (w[i].second < 0)
                    s += "^-1";
            }
            return s;
        };
        for (const auto& [l, r] : doc.presentation.relations)
            out << "relation " << word(l) << " = " << word(r) << "\n";
        break;
    }
    }
    return out.str();
}

} // namespace cmpd
