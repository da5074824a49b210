#include "operadkit/io.hpp"

#include <fstream>
#include <sstream>

namespace operadkit {

namespace {

struct Tokens {
    std::vector<std::string> v;
    size_t i = 0;

    explicit Tokens(const std::string& text) {
        std::istringstream in(text);
        std::string w;
        while (in >> w) v.push_back(w);
    }
    const std::string& next() {
        if (i >= v.size()) throw Error("ParseError", "unexpected end of input");
        return v[i++];
    }
    void expect(const std::string& word) {
        const auto& t = next();
        if (t != word) throw Error("ParseError", "expected '" + word + "', got '" + t + "'");
    }
    int next_int() {
        const auto& t = next();
        try {
            size_t used = 0;
            int n = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            return n;
        } catch (const std::exception&) {
            throw Error("ParseError", "expected an integer, got '" + t + "'");
        }
    }
    std::vector<int> next_ints(int n) {
        std::vector<int> out;
        for (int k = 0; k < n; ++k) out.push_back(next_int());
        return out;
    }
    void done() const {
        if (i != v.size()) throw Error("ParseError", "trailing input: '" + v[i] + "'");
    }
};

std::vector<int> split_csv_ints(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        try {
            out.push_back(std::stoi(s.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            throw Error("ParseError", "bad element list '" + s + "'");
        }
        pos = comma + 1;
    }
    return out;
}

void put_row(std::ostringstream& out, const std::vector<int>& row) {
    for (size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
    out << "\n";
}

GroupPtr parse_group_block(Tokens& t) {
    t.expect("group");
    int n = t.next_int();
    if (n <= 0) throw Error("ParseError", "group order must be positive");
    std::vector<std::vector<int>> mul;
    for (int r = 0; r < n; ++r) mul.push_back(t.next_ints(n));
    return group_from_table(mul);
}

void format_group_block(std::ostringstream& out, const GroupPtr& g) {
    out << "group " << g->order() << "\n";
    for (int a = 0; a < g->order(); ++a) {
        std::vector<int> row;
        for (int b = 0; b < g->order(); ++b) row.push_back(g->op(a, b));
        put_row(out, row);
    }
}

Exponent parse_gset_block(const GroupPtr& g, Tokens& t) {
    t.expect("gset");
    auto els = split_csv_ints(t.next());
    int n = t.next_int();
    if (n < 0) throw Error("ParseError", "gset size must be nonnegative");
    auto sub = subgroup_from_elements(g, els);
    std::vector<std::vector<int>> action;
    for (int r = 0; r < sub.order(); ++r) action.push_back(t.next_ints(n));
    return exponent_from_action(sub, n, std::move(action));
}

void format_gset_block(std::ostringstream& out, const Exponent& e) {
    out << "gset ";
    for (size_t k = 0; k < e.sub.elements.size(); ++k)
        out << (k ? "," : "") << e.sub.elements[k];
    out << " " << e.size << "\n";
    for (const auto& row : e.action) put_row(out, row);
}

GCategory parse_gcategory_block(const GroupPtr& g, Tokens& t) {
    t.expect("category");
    int no = t.next_int();
    int nm = t.next_int();
    if (no < 0 || nm < 0) throw Error("ParseError", "negative category size");
    auto dom = t.next_ints(nm);
    auto cod = t.next_ints(nm);
    auto idm = t.next_ints(no);
    std::vector<std::vector<int>> comp;
    for (int r = 0; r < nm; ++r) comp.push_back(t.next_ints(nm));
    auto cat = category_from_tables(no, std::move(dom), std::move(cod), std::move(idm),
                                    std::move(comp));
    std::vector<std::vector<int>> act_obj, act_mor;
    for (int x = 0; x < g->order(); ++x) act_obj.push_back(t.next_ints(no));
    for (int x = 0; x < g->order(); ++x) act_mor.push_back(t.next_ints(nm));
    return g_category(g, std::move(cat), std::move(act_obj), std::move(act_mor));
}

void format_gcategory_block(std::ostringstream& out, const GCategory& c) {
    out << "category " << c.cat.num_objects << " " << c.cat.num_morphisms() << "\n";
    put_row(out, c.cat.dom);
    put_row(out, c.cat.cod);
    put_row(out, c.cat.idm);
    for (const auto& row : c.cat.comp) put_row(out, row);
    for (const auto& row : c.act_obj) put_row(out, row);
    for (const auto& row : c.act_mor) put_row(out, row);
}

// tree tokens: '(', ')', or atoms
std::vector<std::string> lex_tree(const std::string& text) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (ch == '(' || ch == ')') {
            out.push_back(std::string(1, ch));
            ++i;
        } else {
            size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
                   text[j] != '(' && text[j] != ')')
                ++j;
            out.push_back(text.substr(i, j - i));
            i = j;
        }
    }
    return out;
}

TreePtr parse_tree_at(const SNAlphabet& a, const std::vector<std::string>& toks, size_t& i) {
    if (i >= toks.size()) throw Error("ParseError", "unexpected end of tree");
    const std::string tok = toks[i++];
    if (tok != "(") {
        try {
            size_t used = 0;
            int n = std::stoi(tok, &used);
            if (used != tok.size() || n <= 0) throw std::invalid_argument(tok);
            return make_leaf(n);
        } catch (const std::exception&) {
            throw Error("ParseError", "expected a leaf number or '(', got '" + tok + "'");
        }
    }
    if (i >= toks.size()) throw Error("ParseError", "unexpected end of tree");
    const std::string head = toks[i++];
    Label l;
    if (head == "e") {
        l = Label{LabelKind::E, -1, -1};
    } else if (head == "ox") {
        l = Label{LabelKind::Ox, -1, -1};
    } else if (head.rfind("oxT:", 0) == 0) {
        size_t second = head.find(':', 4);
        if (second == std::string::npos)
            throw Error("ParseError", "bad norm atom '" + head + "'");
        int ni, ci;
        try {
            ni = std::stoi(head.substr(4, second - 4));
            ci = std::stoi(head.substr(second + 1));
        } catch (const std::exception&) {
            throw Error("ParseError", "bad norm atom '" + head + "'");
        }
        if (ni < 0 || ni >= static_cast<int>(a.norms.size()) || ci < 0 ||
            ci >= static_cast<int>(a.norms[ni].coset_reps.size()))
            throw Error("ParseError", "norm atom out of range: '" + head + "'");
        l = Label{LabelKind::Norm, ni, ci};
    } else {
        throw Error("ParseError", "unknown tree atom '" + head + "'");
    }
    std::vector<TreePtr> children;
    while (true) {
        if (i >= toks.size()) throw Error("ParseError", "missing ')'");
        if (toks[i] == ")") {
            ++i;
            break;
        }
        children.push_back(parse_tree_at(a, toks, i));
    }
    if (static_cast<int>(children.size()) != a.arity(l))
        throw Error("ParseError", "vertex '" + head + "' expects " + std::to_string(a.arity(l)) +
                                      " children, got " + std::to_string(children.size()));
    return make_vertex(l, std::move(children));
}

}  // namespace

GroupPtr parse_group(const std::string& text) {
    Tokens t(text);
    auto g = parse_group_block(t);
    t.done();
    return g;
}

std::string format_group(const GroupPtr& g) {
    std::ostringstream out;
    format_group_block(out, g);
    return out.str();
}

Exponent parse_gset(const GroupPtr& g, const std::string& text) {
    Tokens t(text);
    auto e = parse_gset_block(g, t);
    t.done();
    return e;
}

std::string format_gset(const Exponent& e) {
    std::ostringstream out;
    format_gset_block(out, e);
    return out.str();
}

TreePtr parse_tree(const SNAlphabet& a, const std::string& text) {
    auto toks = lex_tree(text);
    size_t i = 0;
    auto t = parse_tree_at(a, toks, i);
    if (i != toks.size()) throw Error("ParseError", "trailing input after tree");
    validate_tree(a, t);
    return t;
}

std::string format_tree(const TreePtr& t) {
    if (t->leaf) return std::to_string(t->number);
    std::string head;
    switch (t->label.kind) {
        case LabelKind::E: head = "e"; break;
        case LabelKind::Ox: head = "ox"; break;
        case LabelKind::Norm:
            head = "oxT:" + std::to_string(t->label.norm) + ":" + std::to_string(t->label.coset);
    }
    std::string out = "(" + head;
    for (const auto& c : t->children) out += " " + format_tree(c);
    return out + ")";
}

GCategory parse_gcategory(const GroupPtr& g, const std::string& text) {
    Tokens t(text);
    auto c = parse_gcategory_block(g, t);
    t.done();
    return c;
}

std::string format_gcategory(const GCategory& c) {
    std::ostringstream out;
    format_gcategory_block(out, c);
    return out.str();
}

NormedSMCData parse_nsmc(const std::string& text) {
    Tokens t(text);
    t.expect("nsmc");
    auto g = parse_group_block(t);
    t.expect("norms");
    int k = t.next_int();
    if (k < 0) throw Error("ParseError", "negative norm count");
    std::vector<Exponent> gens;
    for (int j = 0; j < k; ++j) gens.push_back(parse_gset_block(g, t));
    NormedSMCData d;
    d.c = parse_gcategory_block(g, t);
    d.alphabet = build_sn_alphabet(g, gens);
    const int no = d.c.cat.num_objects;
    const int nm = d.c.cat.num_morphisms();
    t.expect("unit");
    d.unit = t.next_int();
    if (d.unit < 0 || d.unit >= no) throw Error("ParseError", "unit object out of range");
    t.expect("tensor");
    d.tensor.n = 2;
    d.tensor.obj = t.next_ints(static_cast<int>(pow_ll(no, 2)));
    d.tensor.mor = t.next_ints(static_cast<int>(pow_ll(nm, 2)));
    t.expect("alpha");
    d.alpha.n = 3;
    d.alpha.comp = t.next_ints(static_cast<int>(pow_ll(no, 3)));
    t.expect("lambda");
    d.lambda.n = 1;
    d.lambda.comp = t.next_ints(no);
    t.expect("rho");
    d.rho.n = 1;
    d.rho.comp = t.next_ints(no);
    t.expect("beta");
    d.beta.n = 2;
    d.beta.comp = t.next_ints(static_cast<int>(pow_ll(no, 2)));
    for (int j = 0; j < k; ++j) {
        const int arity = d.alphabet.norms[j].t.size;
        t.expect("norm");
        if (t.next_int() != j) throw Error("ParseError", "norm blocks must appear in order");
        NFunctor nf;
        nf.n = arity;
        nf.obj = t.next_ints(static_cast<int>(pow_ll(no, arity)));
        nf.mor = t.next_ints(static_cast<int>(pow_ll(nm, arity)));
        d.norms.push_back(std::move(nf));
        t.expect("upsilon");
        NTrans u;
        u.n = arity;
        u.comp = t.next_ints(static_cast<int>(pow_ll(no, arity)));
        d.upsilon.push_back(std::move(u));
    }
    t.done();
    return d;
}

std::string format_nsmc(const NormedSMCData& d) {
    std::ostringstream out;
    out << "nsmc\n";
    format_group_block(out, d.c.group);
    out << "norms " << d.alphabet.norms.size() << "\n";
    for (const auto& n : d.alphabet.norms) format_gset_block(out, n.t);
    format_gcategory_block(out, d.c);
    out << "unit " << d.unit << "\n";
    out << "tensor\n";
    put_row(out, d.tensor.obj);
    put_row(out, d.tensor.mor);
    out << "alpha\n";
    put_row(out, d.alpha.comp);
    out << "lambda\n";
    put_row(out, d.lambda.comp);
    out << "rho\n";
    put_row(out, d.rho.comp);
    out << "beta\n";
    put_row(out, d.beta.comp);
    for (size_t j = 0; j < d.norms.size(); ++j) {
        out << "norm " << j << "\n";
        put_row(out, d.norms[j].obj);
        put_row(out, d.norms[j].mor);
        out << "upsilon\n";
        put_row(out, d.upsilon[j].comp);
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("FileError", "cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("FileError", "cannot write '" + path + "'");
    out << text;
}

}  // namespace operadkit
