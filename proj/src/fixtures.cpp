#include "loophom/fixtures.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace loophom {

namespace {

namespace fs = std::filesystem;

constexpr int kMaxIncludeDepth = 8;

struct Line {
    std::string text;
    int number = 0;
    std::string file;
};

class Cursor {
public:
    explicit Cursor(const Line& l) : line_(l) {}

    void ws()
    {
        while (pos_ < text().size() && std::isspace(static_cast<unsigned char>(text()[pos_])))
            ++pos_;
    }
    bool eof()
    {
        ws();
        return pos_ >= text().size();
    }
    int column() const { return static_cast<int>(pos_) + 1; }
    int line() const { return line_.number; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(where() + msg, line(), column()); }
    std::string where() const { return line_.file.empty() ? "" : line_.file + ": "; }

    // A run of non-space characters.
    std::string token(const char* what = "token")
    {
        ws();
        const std::size_t start = pos_;
        while (pos_ < text().size() && !std::isspace(static_cast<unsigned char>(text()[pos_])))
            ++pos_;
        if (start == pos_)
            fail(std::string("expected ") + what);
        return text().substr(start, pos_ - start);
    }

    std::string ident()
    {
        ws();
        const std::size_t start = pos_;
        if (pos_ < text().size() && (std::isalpha(static_cast<unsigned char>(text()[pos_])) || text()[pos_] == '_')) {
            ++pos_;
            while (pos_ < text().size() &&
                   (std::isalnum(static_cast<unsigned char>(text()[pos_])) || text()[pos_] == '_'))
                ++pos_;
        }
        if (start == pos_)
            fail("expected a name");
        return text().substr(start, pos_ - start);
    }

    int integer()
    {
        ws();
        const std::size_t start = pos_;
        while (pos_ < text().size() && std::isdigit(static_cast<unsigned char>(text()[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        if (pos_ - start > 6)
            fail("integer too large");
        return std::stoi(text().substr(start, pos_ - start));
    }

    bool accept(const std::string& tok)
    {
        ws();
        if (text().compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok)
    {
        if (!accept(tok))
            fail("expected '" + tok + "'");
    }
    bool peek_digit()
    {
        ws();
        return pos_ < text().size() && std::isdigit(static_cast<unsigned char>(text()[pos_]));
    }
    std::string rest()
    {
        ws();
        std::string r = text().substr(pos_);
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back())))
            r.pop_back();
        pos_ = text().size();
        return r;
    }
    void done()
    {
        if (!eof())
            fail("unexpected trailing text");
    }

private:
    const std::string& text() const { return line_.text; }
    const Line& line_;
    std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& s)
{
    const auto hash = s.find('#');
    std::string out = hash == std::string::npos ? s : s.substr(0, hash);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back())))
        out.pop_back();
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path, 0, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void expand(const std::string& text, const std::string& file, const std::string& base_dir, int depth,
            std::vector<Line>& out)
{
    if (depth > kMaxIncludeDepth)
        throw ParseError("include nesting too deep in " + file, 0, 0);
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        Line l{strip_comment(raw), number, file};
        Cursor c(l);
        if (c.eof())
            continue;
        Cursor probe(l);
        if (probe.token() == "include") {
            const std::string rel = probe.rest();
            if (rel.empty())
                probe.fail("include needs a path");
            const fs::path p = fs::path(base_dir) / rel;
            expand(read_file(p.string()), p.filename().string(), p.parent_path().string(), depth + 1, out);
            continue;
        }
        out.push_back(std::move(l));
    }
}

using Lookup = std::function<std::optional<std::size_t>(const std::string&)>;

Monomial parse_monomial(Cursor& c, std::size_t nvars, const Lookup& find)
{
    Monomial m(nvars, 0);
    if (c.peek_digit()) {
        const int col = c.column();
        if (c.integer() != 1)
            throw ParseError(c.where() + "only the constant 1 may appear in a monomial", c.line(), col);
        return m;
    }
    do {
        const int col = c.column();
        const std::string name = c.ident();
        const auto idx = find(name);
        if (!idx)
            throw UnknownSymbol(c.where() + "unknown symbol '" + name + "'", c.line(), col);
        int e = 1;
        if (c.accept("^"))
            e = c.integer();
        m[*idx] = static_cast<std::uint16_t>(m[*idx] + e);
    } while (c.accept("*"));
    return m;
}

Element parse_element(Cursor& c, std::size_t nvars, const Lookup& find)
{
    Element e;
    if (c.accept("0") && (c.eof() || !c.peek_digit()))
        return e;
    do
        e.toggle(parse_monomial(c, nvars, find));
    while (c.accept("+"));
    return e;
}

Tensor parse_tensor(Cursor& c, std::size_t nvars, const Lookup& find)
{
    Tensor t;
    if (c.accept("0"))
        return t;
    do {
        Monomial a = parse_monomial(c, nvars, find);
        c.expect("(x)");
        Monomial b = parse_monomial(c, nvars, find);
        t.toggle({std::move(a), std::move(b)});
    } while (c.accept("+"));
    return t;
}

template <class F>
void rethrow_as_degree(Cursor& c, int col, F&& f)
{
    try {
        f();
    } catch (const InhomogeneousRelation& e) {
        throw DegreeMismatch(c.where() + e.what(), c.line(), col);
    } catch (const UnknownGenerator& e) {
        throw UnknownSymbol(c.where() + e.what(), c.line(), col);
    } catch (const FixtureError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(c.where() + e.what(), c.line(), col);
    }
}

Fixture parse_lines(const std::vector<Line>& lines)
{
    Fixture f;
    f.name = "unnamed";
    std::vector<GeneratorSpec> gens;
    std::vector<VariableSpec> vars;
    bool header = false;

    // Pass 1: header and generators.
    for (const auto& l : lines) {
        Cursor c(l);
        const std::string kw = c.token();
        if (kw == "algebra" || kw == "ring") {
            if (header)
                c.fail("second algebra/ring header");
            header = true;
            f.is_ring = kw == "ring";
            f.name = c.ident();
            c.done();
        } else if (kw == "generator") {
            GeneratorSpec g;
            g.name = c.ident();
            c.expect("deg");
            const int dcol = c.column();
            g.degree = c.integer();
            if (g.degree < 1)
                throw DegreeMismatch(c.where() + "generator degree must be positive", c.line(), dcol);
            if (c.accept("nil")) {
                const int hcol = c.column();
                g.height = c.integer();
                if (g.height < 2)
                    throw ParseError(c.where() + "nilpotence height must be at least 2", c.line(), hcol);
            } else {
                c.accept("poly");
            }
            c.done();
            for (const auto& other : gens)
                if (other.name == g.name)
                    c.fail("duplicate generator " + g.name);
            gens.push_back(g);
        }
    }
    if (f.is_ring) {
        for (const auto& g : gens) {
            if (g.height)
                throw ParseError("ring variable " + g.name + " cannot carry a height", 0, 0);
            vars.push_back({g.name, g.degree});
        }
        f.ring = CommutativeRing(f.name, vars);
        f.presentation = Presentation(f.name, {});
    } else {
        f.presentation = Presentation(f.name, gens);
    }
    f.coproduct = CoproductSpec(f.presentation);

    const auto& pres = f.presentation;
    const Lookup gen_lookup = [&](const std::string& n) { return pres.find(n); };
    const Lookup var_lookup = [&](const std::string& n) { return f.ring.find(n); };
    const std::size_t nvars = f.is_ring ? f.ring.variables().size() : pres.size();
    const Lookup& lookup = f.is_ring ? var_lookup : gen_lookup;

    auto need_algebra = [&](Cursor& c, const std::string& kw) {
        if (f.is_ring)
            c.fail("'" + kw + "' is not allowed in a ring fixture");
    };
    auto need_ring = [&](Cursor& c, const std::string& kw) {
        if (!f.is_ring)
            c.fail("'" + kw + "' is only allowed in a ring fixture");
    };
    auto symbol = [&](Cursor& c) {
        const int col = c.column();
        const std::string name = c.ident();
        const auto idx = lookup(name);
        if (!idx)
            throw UnknownSymbol(c.where() + "unknown symbol '" + name + "'", c.line(), col);
        return *idx;
    };

    // Pass 2: everything else.
    for (const auto& l : lines) {
        Cursor c(l);
        const int kcol = c.column();
        const std::string kw = c.token();
        if (kw == "algebra" || kw == "ring" || kw == "generator") {
            continue;
        } else if (kw == "comm") {
            need_algebra(c, kw);
            const std::size_t g = symbol(c), h = symbol(c);
            c.expect("=");
            const int col = c.column();
            Element e = parse_element(c, nvars, lookup);
            c.done();
            try {
                f.presentation.set_commutator(g, h, std::move(e));
            } catch (const InhomogeneousRelation& ex) {
                throw InhomogeneousRelation(c.where() + "line " + std::to_string(c.line()) + ": " + ex.what());
            } catch (const std::invalid_argument& ex) {
                throw ParseError(c.where() + ex.what(), c.line(), col);
            }
        } else if (kw == "coproduct") {
            need_algebra(c, kw);
            const std::size_t g = symbol(c);
            c.expect("=");
            const int col = c.column();
            Tensor t = parse_tensor(c, nvars, lookup);
            c.done();
            rethrow_as_degree(c, col, [&] { f.coproduct.set(pres, g, std::move(t)); });
        } else if (kw == "steenrod") {
            need_algebra(c, kw);
            const int k = c.integer();
            const std::size_t g = symbol(c);
            c.expect("=");
            const int col = c.column();
            Element e = parse_element(c, nvars, lookup);
            c.done();
            rethrow_as_degree(c, col, [&] { f.steenrod.set(pres, k, g, std::move(e)); });
        } else if (kw == "square") {
            need_ring(c, kw);
            const int k = c.integer();
            const std::size_t v = symbol(c);
            c.expect("=");
            const int col = c.column();
            Element e = parse_element(c, nvars, lookup);
            c.done();
            rethrow_as_degree(c, col, [&] { f.ring.add_square({k, v, std::move(e)}); });
        } else if (kw == "relation") {
            need_ring(c, kw);
            Element e = parse_element(c, nvars, lookup);
            c.accept("=") && c.accept("0");
            c.done();
            try {
                f.ring.add_relation(std::move(e));
            } catch (const InhomogeneousRelation& ex) {
                throw InhomogeneousRelation(c.where() + "line " + std::to_string(c.line()) + ": " + ex.what());
            }
        } else if (kw == "differential") {
            need_algebra(c, kw);
            if (c.accept("steenrod")) {
                const int col = c.column();
                const int k = c.integer();
                c.done();
                if (k != 1)
                    throw DegreeMismatch(c.where() + "a differential must lower degree by one", c.line(), col);
                f.differential_square = k;
                continue;
            }
            const std::size_t g = symbol(c);
            c.expect("=");
            const int col = c.column();
            Element e = parse_element(c, nvars, lookup);
            c.done();
            rethrow_as_degree(c, col, [&] { f.differential.set(pres, g, std::move(e)); });
        } else if (kw == "expect") {
            const std::string what = c.token("expectation kind");
            if (what == "dims") {
                std::vector<std::uint64_t> d;
                while (!c.eof())
                    d.push_back(static_cast<std::uint64_t>(c.integer()));
                if (d.empty())
                    c.fail("expect dims needs at least one value");
                f.expect_dims = GradedDims(std::move(d));
            } else if (what == "product") {
                const int col = c.column();
                f.expect_product = c.rest();
                try {
                    product_series(f.expect_product, 0);
                } catch (const ParseError& e) {
                    throw ParseError(c.where() + e.what(), c.line(), col);
                }
            } else if (what == "unit") {
                c.done();
                f.expect_unit = true;
            } else if (what == "failure") {
                ExpectedFailure ef;
                ef.check = c.token("check name");
                ef.degree = c.integer();
                ef.witness = c.rest();
                f.expect_failures.push_back(std::move(ef));
            } else {
                c.fail("unknown expectation '" + what + "'");
            }
        } else if (kw == "anchor") {
            const std::string check = c.token("check name");
            f.anchors[check] = c.rest();
        } else {
            throw ParseError(c.where() + "unknown keyword '" + kw + "'", c.line(), kcol);
        }
    }
    return f;
}

}  // namespace

DerivationSpec Fixture::effective_differential() const
{
    if (!differential_square)
        return differential;
    SteenrodModule m(presentation, coproduct, steenrod);
    DerivationSpec d;
    for (std::size_t g = 0; g < presentation.size(); ++g)
        d.set(presentation, g, m.generator_value(*differential_square, g));
    return d;
}

Fixture load_fixture(const std::string& text, const std::string& base_dir)
{
    std::vector<Line> lines;
    expand(text, "", base_dir, 0, lines);
    return parse_lines(lines);
}

Fixture load_fixture_file(const std::string& path)
{
    std::vector<Line> lines;
    const fs::path p(path);
    expand(read_file(path), p.filename().string(), p.parent_path().string(), 0, lines);
    return parse_lines(lines);
}

namespace {

ScheduleFile parse_schedule(const std::vector<Line>& lines)
{
    ScheduleFile s;
    std::vector<std::pair<std::string, std::vector<Line>>> blocks;
    for (const auto& l : lines) {
        Cursor c(l);
        const std::string kw = c.token();
        if (kw == "schedule") {
            s.name = c.ident();
            c.done();
        } else if (kw == "stage") {
            blocks.emplace_back(c.token("page label"), std::vector<Line>{});
            c.done();
        } else {
            if (blocks.empty())
                c.fail("fixture line before the first stage");
            blocks.back().second.push_back(l);
        }
    }
    if (s.name.empty())
        throw ParseError("schedule file has no 'schedule' line", 0, 0);
    for (auto& [label, block] : blocks)
        s.stages.emplace_back(label, parse_lines(block));
    return s;
}

}  // namespace

ScheduleFile load_schedule(const std::string& text, const std::string& base_dir)
{
    std::vector<Line> lines;
    expand(text, "", base_dir, 0, lines);
    return parse_schedule(lines);
}

ScheduleFile load_schedule_file(const std::string& path)
{
    std::vector<Line> lines;
    const fs::path p(path);
    expand(read_file(path), p.filename().string(), p.parent_path().string(), 0, lines);
    return parse_schedule(lines);
}

BSSSchedule ScheduleFile::schedule() const
{
    BSSSchedule out;
    out.name = name;
    for (const auto& [label, f] : stages)
        out.stages.push_back({label, f.presentation, f.effective_differential()});
    return out;
}

std::string serialize(const Fixture& f)
{
    std::ostringstream out;
    if (f.is_ring) {
        out << "ring " << f.name << '\n';
        for (const auto& v : f.ring.variables())
            out << "generator " << v.name << " deg " << v.degree << '\n';
        for (const auto& r : f.ring.relations())
            out << "relation " << f.ring.format(r) << '\n';
        for (const auto& sq : f.ring.squares())
            out << "square " << sq.k << ' ' << f.ring.variables()[sq.variable].name << " = " << f.ring.format(sq.value)
                << '\n';
    } else {
        const auto& p = f.presentation;
        out << "algebra " << f.name << '\n';
        for (const auto& g : p.generators()) {
            out << "generator " << g.name << " deg " << g.degree;
            if (g.height)
                out << " nil " << g.height;
            else
                out << " poly";
            out << '\n';
        }
        for (const auto& [key, value] : p.commutators())
            out << "comm " << p.generator(key.first).name << ' ' << p.generator(key.second).name << " = "
                << p.format(value) << '\n';
        for (const auto& [g, t] : f.coproduct.values()) {
            out << "coproduct " << p.generator(g).name << " = ";
            bool first = true;
            for (const auto& [a, b] : t) {
                out << (first ? "" : " + ") << p.format(a) << " (x) " << p.format(b);
                first = false;
            }
            out << '\n';
        }
        for (const auto& [key, value] : f.steenrod.values())
            out << "steenrod " << key.first << ' ' << p.generator(key.second).name << " = " << p.format(value) << '\n';
        for (const auto& [g, value] : f.differential.values())
            out << "differential " << p.generator(g).name << " = " << p.format(value) << '\n';
        if (f.differential_square)
            out << "differential steenrod " << *f.differential_square << '\n';
    }
    if (f.expect_dims) {
        out << "expect dims";
        for (auto v : f.expect_dims->values())
            out << ' ' << v;
        out << '\n';
    }
    if (!f.expect_product.empty())
        out << "expect product " << f.expect_product << '\n';
    if (f.expect_unit)
        out << "expect unit\n";
    for (const auto& ef : f.expect_failures)
        out << "expect failure " << ef.check << ' ' << ef.degree << ' ' << ef.witness << '\n';
    for (const auto& [check, text] : f.anchors)
        out << "anchor " << check << ' ' << text << '\n';
    return out.str();
}

GradedDims product_series(const std::string& expression, int cap)
{
    Line l{expression, 1, ""};
    Cursor c(l);
    GradedDims series = GradedDims::unit(cap);
    auto degree_of = [&](const std::string& name, int col) {
        std::size_t i = name.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1])))
            --i;
        if (i == name.size() || i == 0)
            throw ParseError("cannot read a degree from '" + name + "'", 1, col);
        return std::stoi(name.substr(i));
    };
    do {
        const int col = c.column();
        const bool exterior = c.accept("E[");
        if (!exterior && !c.accept("P["))
            throw ParseError("expected P[...] or E[...]", 1, col);
        std::vector<std::pair<std::string, int>> names;
        do {
            const int ncol = c.column();
            const std::string n = c.ident();
            names.emplace_back(n, degree_of(n, ncol));
        } while (c.accept(","));
        c.expect("]");
        int height = exterior ? 2 : 0;
        if (!exterior && c.accept("/(")) {
            const std::string n = c.ident();
            if (names.size() != 1 || n != names[0].first)
                c.fail("truncation must name the single generator");
            c.expect("^");
            height = c.integer();
            if (height < 2)
                c.fail("truncation height must be at least 2");
            c.expect(")");
        }
        for (const auto& [n, d] : names)
            series = series * GradedDims::truncated_polynomial(d, height, cap);
    } while (c.accept("(x)"));
    c.done();
    return series;
}

}  // namespace loophom
