#include "cutcalc/dsl.hpp"

#include "cutcalc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cutcalc::dsl {

namespace {

// Structural integers (degrees, exponents, n, top) are capped so that degree
// arithmetic stays far from overflow; rational literal values are unbounded.
constexpr long kMaxStructuralInt = 1000000;
constexpr int kMaxDegree = 64;
constexpr int kMaxExponent = 256;
constexpr std::size_t kMaxGenerators = 64;

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_trivia();
        current_.line = line_;
        current_.col = col_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            current_.text.clear();
            return;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                step();
            current_.kind = Token::Kind::Ident;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                step();
            current_.kind = Token::Kind::Int;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            current_.kind = Token::Kind::Punct;
            current_.text = "->";
            step();
            step();
            return;
        }
        static const std::string singles = "{}()[];:,=+-*/^";
        if (singles.find(c) != std::string::npos) {
            current_.kind = Token::Kind::Punct;
            current_.text = std::string(1, c);
            step();
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    step();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                step();
            } else {
                break;
            }
        }
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    ScenarioDoc parse() {
        bool have_cut = false;
        while (lex_.peek().kind != Token::Kind::End) {
            const Token head = expect_ident("'algebra', 'map', 'cut' or 'iso'");
            if (head.text == "algebra") {
                parse_algebra();
            } else if (head.text == "map") {
                parse_map();
            } else if (head.text == "cut") {
                if (have_cut)
                    throw ParseError(head.line, head.col, "duplicate cut block");
                parse_cut();
                have_cut = true;
            } else if (head.text == "iso") {
                if (doc_.iso)
                    throw ParseError(head.line, head.col, "duplicate iso block");
                if (!have_cut)
                    throw ParseError(head.line, head.col, "iso block must come after the cut block");
                parse_iso();
            } else {
                throw ParseError(head.line, head.col,
                                 "expected 'algebra', 'map', 'cut' or 'iso', got '" + head.text + "'");
            }
        }
        if (!have_cut)
            throw ParseError(1, 1, "missing cut block");
        return std::move(doc_);
    }

private:
    Token expect(Token::Kind kind, const std::string& what) {
        const Token t = lex_.next();
        if (t.kind != kind)
            throw ParseError(t.line, t.col, "expected " + what + ", got '" +
                                                (t.kind == Token::Kind::End ? "end of input" : t.text) +
                                                "'");
        return t;
    }

    Token expect_ident(const std::string& what) { return expect(Token::Kind::Ident, what); }

    Token expect_punct(const std::string& text) {
        const Token t = lex_.next();
        if (t.kind != Token::Kind::Punct || t.text != text)
            throw ParseError(t.line, t.col, "expected '" + text + "', got '" +
                                                (t.kind == Token::Kind::End ? "end of input" : t.text) +
                                                "'");
        return t;
    }

    bool accept_punct(const std::string& text) {
        if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == text) {
            lex_.next();
            return true;
        }
        return false;
    }

    long parse_structural_int(const std::string& what) {
        const Token t = expect(Token::Kind::Int, what);
        if (t.text.size() > 9)
            throw ParseError(t.line, t.col, what + " is too large");
        const long value = std::stol(t.text);
        if (value > kMaxStructuralInt)
            throw ParseError(t.line, t.col, what + " is too large");
        return value;
    }

    const AlgebraDef* find_algebra(const std::string& name) const {
        for (const AlgebraDef& a : doc_.algebras)
            if (a.name == name)
                return &a;
        return nullptr;
    }

    const MapDef* find_map(const std::string& name) const {
        for (const MapDef& m : doc_.maps)
            if (m.name == name)
                return &m;
        return nullptr;
    }

    const AlgebraDef& require_algebra(const Token& name) const {
        const AlgebraDef* a = find_algebra(name.text);
        if (!a)
            throw ParseError(name.line, name.col, "unknown algebra '" + name.text + "'");
        return *a;
    }

    // ---- polynomial expressions -------------------------------------------

    static std::optional<std::size_t> gen_index(const std::vector<Generator>& gens,
                                                const std::string& name) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name)
                return i;
        return std::nullopt;
    }

    Poly parse_poly(const std::vector<Generator>& gens) {
        Poly acc = poly_zero();
        bool negate = accept_punct("-");
        if (!negate)
            accept_punct("+");
        poly_add_in_place(acc, parse_term(gens, negate));
        while (true) {
            if (accept_punct("+"))
                poly_add_in_place(acc, parse_term(gens, false));
            else if (accept_punct("-"))
                poly_add_in_place(acc, parse_term(gens, true));
            else
                break;
        }
        return acc;
    }

    Poly parse_term(const std::vector<Generator>& gens, bool negate) {
        Poly acc = parse_factor(gens);
        while (accept_punct("*"))
            acc = poly_mul(acc, parse_factor(gens), gens);
        if (negate)
            acc = poly_scale(acc, Rat(-1));
        return acc;
    }

    Poly parse_factor(const std::vector<Generator>& gens) {
        Poly base = parse_atom(gens);
        if (accept_punct("^")) {
            const Token exp_tok = lex_.peek();
            const long e = parse_structural_int("exponent");
            if (e > kMaxExponent)
                throw ParseError(exp_tok.line, exp_tok.col, "exponent is too large");
            Poly out = poly_term(Rat(1), Monomial::unit(gens.size()));
            for (long k = 0; k < e; ++k)
                out = poly_mul(out, base, gens);
            return out;
        }
        return base;
    }

    Poly parse_atom(const std::vector<Generator>& gens) {
        const Token t = lex_.next();
        if (t.kind == Token::Kind::Int) {
            Rat value(t.text, 10);
            if (accept_punct("/")) {
                const Token den = expect(Token::Kind::Int, "denominator");
                if (den.text.find_first_not_of('0') == std::string::npos)
                    throw ParseError(den.line, den.col, "zero denominator");
                value = Rat(t.text + "/" + den.text, 10);
            }
            value.canonicalize();
            return poly_term(value, Monomial::unit(gens.size()));
        }
        if (t.kind == Token::Kind::Ident) {
            auto idx = gen_index(gens, t.text);
            if (!idx)
                throw ParseError(t.line, t.col, "unknown identifier '" + t.text + "'");
            return poly_term(Rat(1), Monomial::generator(gens.size(), *idx));
        }
        if (t.kind == Token::Kind::Punct && t.text == "(") {
            Poly inner = parse_poly(gens);
            expect_punct(")");
            return inner;
        }
        throw ParseError(t.line, t.col, "expected a polynomial, got '" +
                                            (t.kind == Token::Kind::End ? "end of input" : t.text) +
                                            "'");
    }

    /// Homogeneity/degree check with a position to blame.
    std::optional<int> checked_degree(const Poly& p, const std::vector<Generator>& gens,
                                      const Token& at) {
        try {
            return poly_degree(p, gens);
        } catch (const AlgebraError& e) {
            throw ParseError(at.line, at.col, e.what());
        }
    }

    // ---- blocks -------------------------------------------------------------

    void parse_algebra() {
        const Token name = expect_ident("algebra name");
        if (find_algebra(name.text))
            throw ParseError(name.line, name.col, "duplicate algebra '" + name.text + "'");
        AlgebraDef def;
        def.name = name.text;
        bool have_top = false;
        expect_punct("{");
        while (!accept_punct("}")) {
            const Token stmt = expect_ident("'gen', 'rel', 'top' or '}'");
            if (stmt.text == "gen") {
                do {
                    const Token gname = expect_ident("generator name");
                    if (gen_index(def.pres.generators, gname.text))
                        throw ParseError(gname.line, gname.col,
                                         "duplicate generator '" + gname.text + "'");
                    expect_punct(":");
                    const Token deg_tok = lex_.peek();
                    const long deg = parse_structural_int("generator degree");
                    if (deg < 1 || deg > kMaxDegree)
                        throw ParseError(deg_tok.line, deg_tok.col,
                                         "generator degree must be between 1 and " +
                                             std::to_string(kMaxDegree));
                    if (def.pres.generators.size() >= kMaxGenerators)
                        throw ParseError(gname.line, gname.col, "too many generators");
                    if (!def.pres.relations.empty())
                        throw ParseError(gname.line, gname.col,
                                         "generators must be declared before relations");
                    def.pres.generators.push_back(Generator{gname.text, static_cast<int>(deg)});
                } while (accept_punct(","));
                expect_punct(";");
            } else if (stmt.text == "rel") {
                const Token at = lex_.peek();
                Poly rel = parse_poly(def.pres.generators);
                expect_punct(";");
                auto deg = checked_degree(rel, def.pres.generators, at);
                if (deg && *deg == 0)
                    throw ParseError(at.line, at.col, "relation is a nonzero constant");
                if (!poly_is_zero(rel))
                    def.pres.relations.push_back(std::move(rel));
            } else if (stmt.text == "top") {
                if (have_top)
                    throw ParseError(stmt.line, stmt.col, "duplicate top degree");
                const Token at = lex_.peek();
                const long top = parse_structural_int("top degree");
                if (top < 0 || top > kMaxDegree)
                    throw ParseError(at.line, at.col, "top degree must be between 0 and " +
                                                          std::to_string(kMaxDegree));
                def.pres.top_degree = static_cast<int>(top);
                have_top = true;
                expect_punct(";");
            } else {
                throw ParseError(stmt.line, stmt.col,
                                 "expected 'gen', 'rel' or 'top', got '" + stmt.text + "'");
            }
        }
        if (!have_top)
            throw ParseError(name.line, name.col,
                             "algebra '" + def.name + "' is missing its top degree");
        doc_.algebras.push_back(std::move(def));
    }

    void parse_map() {
        const Token name = expect_ident("map name");
        if (find_map(name.text))
            throw ParseError(name.line, name.col, "duplicate map '" + name.text + "'");
        MapDef def;
        def.name = name.text;
        expect_punct(":");
        const Token src = expect_ident("source algebra");
        const AlgebraDef& src_def = require_algebra(src);
        expect_punct("->");
        const Token dst = expect_ident("target algebra");
        const AlgebraDef& dst_def = require_algebra(dst);
        def.src = src.text;
        def.dst = dst.text;
        expect_punct("{");
        std::vector<std::optional<Poly>> images(src_def.pres.generators.size());
        while (!accept_punct("}")) {
            const Token gname = expect_ident("source generator name");
            auto idx = gen_index(src_def.pres.generators, gname.text);
            if (!idx)
                throw ParseError(gname.line, gname.col, "unknown generator '" + gname.text +
                                                            "' in algebra '" + def.src + "'");
            if (images[*idx])
                throw ParseError(gname.line, gname.col,
                                 "duplicate image for generator '" + gname.text + "'");
            expect_punct("->");
            const Token at = lex_.peek();
            Poly img = parse_poly(dst_def.pres.generators);
            expect_punct(";");
            auto deg = checked_degree(img, dst_def.pres.generators, at);
            const int want = src_def.pres.generators[*idx].degree;
            if (deg && *deg != want)
                throw ParseError(at.line, at.col,
                                 "image of '" + gname.text + "' has degree " +
                                     std::to_string(*deg) + ", expected " + std::to_string(want));
            images[*idx] = std::move(img);
        }
        for (std::size_t k = 0; k < images.size(); ++k) {
            if (!images[k])
                throw ParseError(name.line, name.col,
                                 "map '" + def.name + "' is missing an image for generator '" +
                                     src_def.pres.generators[k].name + "'");
            def.images.push_back(MapImage{src_def.pres.generators[k].name, std::move(*images[k])});
        }
        doc_.maps.push_back(std::move(def));
    }

    void require_cut_names(const Token& at, const char* field) const {
        if (doc_.cut.minus.empty() || doc_.cut.total.empty())
            throw ParseError(at.line, at.col, std::string(field) +
                                                  " requires minus and total to be set first");
    }

    DeltaPairSrc parse_delta_pair() {
        const Token open = expect_punct("{");
        require_cut_names(open, "delta");
        const std::vector<Generator>& cgens = find_algebra(doc_.cut.minus)->pres.generators;
        const std::vector<Generator>& mgens = find_algebra(doc_.cut.total)->pres.generators;

        const Token ctag = expect_ident("'cminus'");
        if (ctag.text != "cminus")
            throw ParseError(ctag.line, ctag.col, "expected 'cminus', got '" + ctag.text + "'");
        expect_punct(":");
        const Token cat = lex_.peek();
        DeltaPairSrc pair;
        pair.c_minus = parse_poly(cgens);
        auto cdeg = checked_degree(pair.c_minus, cgens, cat);
        expect_punct(",");
        const Token mtag = expect_ident("'m'");
        if (mtag.text != "m")
            throw ParseError(mtag.line, mtag.col, "expected 'm', got '" + mtag.text + "'");
        expect_punct(":");
        const Token mat = lex_.peek();
        pair.m = parse_poly(mgens);
        auto mdeg = checked_degree(pair.m, mgens, mat);
        expect_punct("}");

        if (!cdeg && !mdeg)
            throw ParseError(open.line, open.col, "delta pair is identically zero");
        if (cdeg && mdeg && *cdeg != *mdeg)
            throw ParseError(open.line, open.col,
                             "delta pair mixes degrees " + std::to_string(*cdeg) + " and " +
                                 std::to_string(*mdeg));
        pair.degree = cdeg ? *cdeg : *mdeg;
        return pair;
    }

    std::vector<std::size_t> parse_dim_list() {
        std::vector<std::size_t> dims;
        do {
            const long v = parse_structural_int("dimension");
            dims.push_back(static_cast<std::size_t>(v));
        } while (accept_punct(","));
        return dims;
    }

    void parse_expect_block() {
        ExpectBlock block;
        expect_punct("{");
        while (!accept_punct("}")) {
            const Token field = expect_ident("'cplus', 'c' or 'c0'");
            expect_punct("=");
            std::vector<std::size_t> dims = parse_dim_list();
            expect_punct(";");
            auto assign = [&](std::optional<std::vector<std::size_t>>& slot) {
                if (slot)
                    throw ParseError(field.line, field.col,
                                     "duplicate expect field '" + field.text + "'");
                slot = std::move(dims);
            };
            if (field.text == "cplus")
                assign(block.c_plus);
            else if (field.text == "c")
                assign(block.c);
            else if (field.text == "c0")
                assign(block.c0);
            else
                throw ParseError(field.line, field.col,
                                 "expected 'cplus', 'c' or 'c0', got '" + field.text + "'");
        }
        doc_.cut.expect = std::move(block);
    }

    void parse_cut() {
        expect_punct("{");
        bool have_n = false, have_delta = false, have_pd = false, have_expect = false;
        while (!accept_punct("}")) {
            const Token field = expect_ident("cut field");
            auto set_name = [&](std::string& slot, const char* what) {
                if (!slot.empty())
                    throw ParseError(field.line, field.col,
                                     std::string("duplicate cut field '") + what + "'");
                expect_punct("=");
                const Token value = expect_ident(what);
                slot = value.text;
                expect_punct(";");
                return value;
            };
            if (field.text == "minus") {
                require_algebra(set_name(doc_.cut.minus, "minus"));
            } else if (field.text == "total") {
                require_algebra(set_name(doc_.cut.total, "total"));
            } else if (field.text == "common") {
                require_algebra(set_name(doc_.cut.common, "common"));
            } else if (field.text == "p" || field.text == "i") {
                std::string& slot = field.text == "p" ? doc_.cut.p : doc_.cut.i;
                const Token value = set_name(slot, field.text.c_str());
                if (!find_map(value.text))
                    throw ParseError(value.line, value.col, "unknown map '" + value.text + "'");
            } else if (field.text == "n") {
                if (have_n)
                    throw ParseError(field.line, field.col, "duplicate cut field 'n'");
                expect_punct("=");
                const Token at = lex_.peek();
                const long n = parse_structural_int("n");
                if (n < 0 || n > kMaxDegree)
                    throw ParseError(at.line, at.col,
                                     "n must be between 0 and " + std::to_string(kMaxDegree));
                doc_.cut.n = static_cast<int>(n);
                have_n = true;
                expect_punct(";");
            } else if (field.text == "delta") {
                if (have_delta)
                    throw ParseError(field.line, field.col, "duplicate cut field 'delta'");
                have_delta = true;
                expect_punct("=");
                expect_punct("[");
                if (!accept_punct("]")) {
                    do {
                        doc_.cut.delta.push_back(parse_delta_pair());
                    } while (accept_punct(","));
                    expect_punct("]");
                }
                expect_punct(";");
            } else if (field.text == "pd") {
                if (have_pd)
                    throw ParseError(field.line, field.col, "duplicate cut field 'pd'");
                have_pd = true;
                require_cut_names(field, "pd");
                expect_punct("=");
                const std::vector<Generator>& cgens = find_algebra(doc_.cut.minus)->pres.generators;
                const Token at = lex_.peek();
                Poly pd = parse_poly(cgens);
                auto deg = checked_degree(pd, cgens, at);
                if (deg && *deg != 2)
                    throw ParseError(at.line, at.col, "pd class must have degree 2, got degree " +
                                                          std::to_string(*deg));
                doc_.cut.pd = std::move(pd);
                expect_punct(";");
            } else if (field.text == "expect") {
                if (have_expect)
                    throw ParseError(field.line, field.col, "duplicate cut field 'expect'");
                have_expect = true;
                parse_expect_block();
            } else {
                throw ParseError(field.line, field.col, "unknown cut field '" + field.text + "'");
            }
        }
        auto require_field = [&](const std::string& value, const char* what) {
            if (value.empty())
                throw ParseError(1, 1, std::string("cut block is missing '") + what + "'");
        };
        require_field(doc_.cut.minus, "minus");
        require_field(doc_.cut.total, "total");
        require_field(doc_.cut.common, "common");
        require_field(doc_.cut.p, "p");
        require_field(doc_.cut.i, "i");
        if (!have_n)
            throw ParseError(1, 1, "cut block is missing 'n'");
        const MapDef& pmap = *find_map(doc_.cut.p);
        if (pmap.src != doc_.cut.minus || pmap.dst != doc_.cut.common)
            throw ParseError(1, 1, "map '" + doc_.cut.p + "' must go from '" + doc_.cut.minus +
                                       "' to '" + doc_.cut.common + "'");
        const MapDef& imap = *find_map(doc_.cut.i);
        if (imap.src != doc_.cut.total || imap.dst != doc_.cut.common)
            throw ParseError(1, 1, "map '" + doc_.cut.i + "' must go from '" + doc_.cut.total +
                                       "' to '" + doc_.cut.common + "'");
    }

    void parse_iso() {
        IsoDef def;
        expect_punct("{");
        const Token tfield = expect_ident("'target'");
        if (tfield.text != "target")
            throw ParseError(tfield.line, tfield.col, "iso block must start with 'target'");
        expect_punct("=");
        const Token tname = expect_ident("target algebra");
        const AlgebraDef& target = require_algebra(tname);
        def.target = tname.text;
        expect_punct(";");

        const std::vector<Generator>& cgens = find_algebra(doc_.cut.minus)->pres.generators;
        const std::vector<Generator>& mgens = find_algebra(doc_.cut.total)->pres.generators;
        std::vector<std::optional<IsoImageSrc>> images(target.pres.generators.size());
        while (!accept_punct("}")) {
            const Token gname = expect_ident("target generator name");
            auto idx = gen_index(target.pres.generators, gname.text);
            if (!idx)
                throw ParseError(gname.line, gname.col, "unknown generator '" + gname.text +
                                                            "' in algebra '" + def.target + "'");
            if (images[*idx])
                throw ParseError(gname.line, gname.col,
                                 "duplicate image for generator '" + gname.text + "'");
            expect_punct("->");
            expect_punct("{");
            const Token ctag = expect_ident("'cminus'");
            if (ctag.text != "cminus")
                throw ParseError(ctag.line, ctag.col, "expected 'cminus', got '" + ctag.text + "'");
            expect_punct(":");
            const Token cat = lex_.peek();
            IsoImageSrc img;
            img.gen = gname.text;
            img.c_minus = parse_poly(cgens);
            auto cdeg = checked_degree(img.c_minus, cgens, cat);
            expect_punct(",");
            const Token mtag = expect_ident("'m'");
            if (mtag.text != "m")
                throw ParseError(mtag.line, mtag.col, "expected 'm', got '" + mtag.text + "'");
            expect_punct(":");
            const Token mat = lex_.peek();
            img.m = parse_poly(mgens);
            auto mdeg = checked_degree(img.m, mgens, mat);
            expect_punct("}");
            expect_punct(";");
            const int want = target.pres.generators[*idx].degree;
            if (cdeg && *cdeg != want)
                throw ParseError(cat.line, cat.col,
                                 "cminus component has degree " + std::to_string(*cdeg) +
                                     ", expected " + std::to_string(want));
            if (mdeg && *mdeg != want)
                throw ParseError(mat.line, mat.col, "m component has degree " +
                                                        std::to_string(*mdeg) + ", expected " +
                                                        std::to_string(want));
            images[*idx] = std::move(img);
        }
        for (std::size_t k = 0; k < images.size(); ++k) {
            if (!images[k])
                throw ParseError(tname.line, tname.col,
                                 "iso block is missing an image for generator '" +
                                     target.pres.generators[k].name + "'");
            def.images.push_back(std::move(*images[k]));
        }
        doc_.iso = std::move(def);
    }

    Lexer lex_;
    ScenarioDoc doc_;
};

}  // namespace

const AlgebraDef& ScenarioDoc::algebra(const std::string& name) const {
    for (const AlgebraDef& a : algebras)
        if (a.name == name)
            return a;
    throw AlgebraError("unknown algebra '" + name + "'");
}

const MapDef& ScenarioDoc::map(const std::string& name) const {
    for (const MapDef& m : maps)
        if (m.name == name)
            return m;
    throw AlgebraError("unknown map '" + name + "'");
}

ScenarioDoc parse_document(std::string_view text) {
    return Parser(text).parse();
}

namespace {

GradedHom realize_map(const MapDef& def, const Realization& src, const Realization& dst) {
    std::vector<Element> images;
    images.reserve(def.images.size());
    for (std::size_t k = 0; k < def.images.size(); ++k) {
        const int degree = src.presentation().generators[k].degree;
        images.push_back(dst.eval(def.images[k].poly, degree));
    }
    try {
        return build_hom(src, dst.algebra(), images);
    } catch (const ValidationError& e) {
        throw ValidationError("map '" + def.name + "': " + e.what());
    }
}

}  // namespace

Scenario realize_scenario(const ScenarioDoc& doc, const std::string& name) {
    Scenario s;
    s.name = name;
    s.n = doc.cut.n;
    s.c_minus = realize(doc.algebra(doc.cut.minus).pres);
    s.total = realize(doc.algebra(doc.cut.total).pres);
    s.m_minus = realize(doc.algebra(doc.cut.common).pres);
    s.p_star = realize_map(doc.map(doc.cut.p), s.c_minus, s.m_minus);
    s.i_star = realize_map(doc.map(doc.cut.i), s.total, s.m_minus);
    for (const DeltaPairSrc& pair : doc.cut.delta) {
        DeltaGen gen;
        gen.c_minus = s.c_minus.eval(pair.c_minus, pair.degree);
        gen.m = s.total.eval(pair.m, pair.degree);
        s.delta.push_back(std::move(gen));
    }
    if (doc.cut.pd)
        s.pd = s.c_minus.eval(*doc.cut.pd, 2);
    if (doc.cut.expect) {
        const std::size_t want = static_cast<std::size_t>(doc.cut.n) + 1;
        auto check_len = [&](const std::optional<std::vector<std::size_t>>& dims,
                             const char* which) {
            if (dims && dims->size() != want)
                throw ValidationError(std::string("expect '") + which + "' must list dimensions "
                                      "for degrees 0.." + std::to_string(doc.cut.n));
        };
        check_len(doc.cut.expect->c_plus, "cplus");
        check_len(doc.cut.expect->c, "c");
        check_len(doc.cut.expect->c0, "c0");
        s.expect = doc.cut.expect;
    }
    return s;
}

Scenario parse_scenario(std::string_view text, const std::string& name) {
    return realize_scenario(parse_document(text), name);
}

IsoCheckInput realize_iso(const ScenarioDoc& doc, const Scenario& s, const CutReport& report) {
    if (!doc.iso)
        throw ValidationError("scenario has no iso block");
    IsoCheckInput input;
    input.target = doc.algebra(doc.iso->target).pres;
    for (std::size_t k = 0; k < doc.iso->images.size(); ++k) {
        const IsoImageSrc& img = doc.iso->images[k];
        const int degree = input.target.generators[k].degree;
        const Element c = s.c_minus.eval(img.c_minus, degree);
        const Element m = s.total.eval(img.m, degree);
        const Element ambient = direct_sum_element(*s.c_minus.algebra(), *s.total.algebra(), c, m);
        auto in_c = report.c.from_ambient(ambient);
        if (!in_c) {
            const Element residual =
                element_diff(s.p_star.apply(c), s.i_star.apply(m));
            throw ValidationError("iso image of '" + img.gen + "' lies outside ker(p* - i*): "
                                  "p*(c) - i*(m) = " +
                                  s.m_minus.algebra()->element_str(residual));
        }
        input.images.push_back(report.c_plus.project(*in_c));
    }
    return input;
}

std::string print_scenario(const ScenarioDoc& doc) {
    std::ostringstream out;
    for (const AlgebraDef& a : doc.algebras) {
        out << "algebra " << a.name << " {\n";
        if (!a.pres.generators.empty()) {
            out << "  gen ";
            for (std::size_t i = 0; i < a.pres.generators.size(); ++i) {
                if (i)
                    out << ", ";
                out << a.pres.generators[i].name << ":" << a.pres.generators[i].degree;
            }
            out << ";\n";
        }
        for (const Poly& r : a.pres.relations)
            out << "  rel " << poly_str(r, a.pres.generators) << ";\n";
        out << "  top " << a.pres.top_degree << ";\n";
        out << "}\n\n";
    }
    for (const MapDef& m : doc.maps) {
        out << "map " << m.name << ": " << m.src << " -> " << m.dst << " {\n";
        const AlgebraDef& dst = doc.algebra(m.dst);
        for (const MapImage& img : m.images)
            out << "  " << img.gen << " -> " << poly_str(img.poly, dst.pres.generators) << ";\n";
        out << "}\n\n";
    }
    const AlgebraDef& minus = doc.algebra(doc.cut.minus);
    const AlgebraDef& total = doc.algebra(doc.cut.total);
    out << "cut {\n";
    out << "  minus = " << doc.cut.minus << ";\n";
    out << "  total = " << doc.cut.total << ";\n";
    out << "  common = " << doc.cut.common << ";\n";
    out << "  p = " << doc.cut.p << ";\n";
    out << "  i = " << doc.cut.i << ";\n";
    out << "  n = " << doc.cut.n << ";\n";
    out << "  delta = [";
    for (std::size_t k = 0; k < doc.cut.delta.size(); ++k) {
        if (k)
            out << ",";
        out << "\n    { cminus: " << poly_str(doc.cut.delta[k].c_minus, minus.pres.generators)
            << ", m: " << poly_str(doc.cut.delta[k].m, total.pres.generators) << " }";
    }
    out << (doc.cut.delta.empty() ? "];\n" : "\n  ];\n");
    if (doc.cut.pd)
        out << "  pd = " << poly_str(*doc.cut.pd, minus.pres.generators) << ";\n";
    if (doc.cut.expect) {
        out << "  expect {\n";
        auto dims_line = [&](const char* which, const std::optional<std::vector<std::size_t>>& dims) {
            if (!dims)
                return;
            out << "    " << which << " = ";
            for (std::size_t i = 0; i < dims->size(); ++i) {
                if (i)
                    out << ",";
                out << (*dims)[i];
            }
            out << ";\n";
        };
        dims_line("cplus", doc.cut.expect->c_plus);
        dims_line("c", doc.cut.expect->c);
        dims_line("c0", doc.cut.expect->c0);
        out << "  }\n";
    }
    out << "}\n";
    if (doc.iso) {
        out << "\niso {\n";
        out << "  target = " << doc.iso->target << ";\n";
        for (const IsoImageSrc& img : doc.iso->images)
            out << "  " << img.gen << " -> { cminus: "
                << poly_str(img.c_minus, minus.pres.generators)
                << ", m: " << poly_str(img.m, total.pres.generators) << " };\n";
        out << "}\n";
    }
    return out.str();
}

}  // namespace cutcalc::dsl
