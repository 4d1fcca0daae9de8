#include "magmakit/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "magmakit/catalog.hpp"
#include "magmakit/error.hpp"

namespace mk {

namespace {

struct Token {
    std::string_view text;
    std::size_t col;  // 1-based
};

std::vector<Token> tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

struct Line {
    std::size_t number;
    std::vector<Token> toks;
};

// non-blank, non-comment lines
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++number;
        auto toks = tokens(line);
        if (!toks.empty() && toks[0].text[0] != '#') out.push_back({number, std::move(toks)});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

[[noreturn]] void fail(std::string_view source, std::size_t line, std::size_t col, const std::string& msg) {
    throw Error(Errc::parse_error, std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::parse_error, path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto k = s.find(sep, pos);
        out.push_back(s.substr(pos, k == std::string_view::npos ? std::string_view::npos : k - pos));
        if (k == std::string_view::npos) return out;
        pos = k + 1;
    }
}

unsigned number(std::string_view s, std::string_view what) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw Error(Errc::parse_error, "bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

std::string clean(std::string v) {
    for (auto& c : v)
        if (c == ' ' || c == '\t' || c == '\n') c = '_';
    return v.empty() ? "-" : v;
}

}  // namespace

Magma parse_cayley(std::string_view text, std::string_view source) {
    auto lines = content_lines(text);
    if (lines.empty()) fail(source, 1, 1, "no header line");
    const auto& header = lines[0];
    std::vector<std::string> names;
    std::set<std::string_view> seen;
    for (const auto& t : header.toks) {
        if (!seen.insert(t.text).second) fail(source, header.number, t.col, "duplicate element name '" + std::string(t.text) + "'");
        names.emplace_back(t.text);
    }
    const auto n = names.size();
    if (lines.size() - 1 != n) {
        auto at = lines.size() > n + 1 ? lines[n + 1].number : lines.back().number;
        fail(source, at, 1, "expected " + std::to_string(n) + " rows, got " + std::to_string(lines.size() - 1));
    }
    std::vector<ElementId> table;
    table.reserve(n * n);
    for (std::size_t r = 1; r <= n; ++r) {
        const auto& row = lines[r];
        if (row.toks.size() != n) {
            auto col = row.toks.size() > n ? row.toks[n].col : row.toks.back().col + row.toks.back().text.size();
            fail(source, row.number, col,
                 "expected " + std::to_string(n) + " entries, got " + std::to_string(row.toks.size()));
        }
        for (const auto& t : row.toks) {
            std::size_t k = 0;
            while (k < n && names[k] != t.text) ++k;
            if (k == n) fail(source, row.number, t.col, "'" + std::string(t.text) + "' is not in the header");
            table.push_back(static_cast<ElementId>(k));
        }
    }
    return Magma(std::move(names), std::move(table));
}

Magma read_cayley(const std::string& path) { return parse_cayley(slurp(path), path); }

std::string emit_cayley(const Magma& m) {
    std::string out;
    const auto n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ' ';
        out += m.name(static_cast<ElementId>(i));
    }
    out += '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out += ' ';
            out += m.name(m.op(static_cast<ElementId>(i), static_cast<ElementId>(j)));
        }
        out += '\n';
    }
    return out;
}

Magma generate(std::string_view spec, std::string_view prefix) {
    auto parts = split(spec, ':');
    if (parts[0] == "ln-loop") {
        if (parts.size() != 3) throw Error(Errc::parse_error, "ln-loop spec is ln-loop:n:m");
        LnParams p{number(parts[1], "n"), number(parts[2], "m")};
        if (auto err = ln_param_error(p.n, p.m)) throw Error(Errc::invalid_params, *err);
        return ln_loop(p, prefix);
    }
    if (parts[0] == "zn") {
        if (parts.size() != 4 && parts.size() != 5) throw Error(Errc::parse_error, "zn spec is zn:n:t:u[:class]");
        ZnParams p{number(parts[1], "n"), number(parts[2], "t"), number(parts[3], "u"), ZnClass::zzero};
        if (p.n == 0) throw Error(Errc::invalid_params, "n must be positive");
        if (parts.size() == 5) {
            auto c = parse_zn_class(parts[4]);
            if (!c) throw Error(Errc::parse_error, "unknown class '" + std::string(parts[4]) + "'");
            p.cls = *c;
        } else {
            p.cls = zn_tightest_class(p.n, p.t, p.u);
        }
        if (auto err = zn_param_error(p)) throw Error(Errc::invalid_params, *err);
        return zn_groupoid(p, prefix);
    }
    if (parts.size() != 2) throw Error(Errc::parse_error, "generator spec is family:size, ln-loop:n:m or zn:n:t:u[:class]");
    auto f = parse_family(parts[0]);
    if (!f) throw Error(Errc::parse_error, "unknown family '" + std::string(parts[0]) + "'");
    return standard({*f, number(parts[1], "size"), std::string(prefix)});
}

Manifest parse_manifest(std::string_view text, std::string_view source, std::string_view base_dir) {
    Manifest m;
    std::set<std::string> labels;
    for (const auto& line : content_lines(text)) {
        const auto& t = line.toks;
        if (t[0].text == "expect") {
            if (t.size() != 2 || t[1].text.substr(0, 5) != "kind=") fail(source, line.number, t[0].col, "expect takes kind=<label>");
            auto k = parse_nkind(t[1].text.substr(5));
            if (!k) fail(source, line.number, t[1].col + 5, "unknown kind '" + std::string(t[1].text.substr(5)) + "'");
            m.expect = k;
            continue;
        }
        if (t[0].text != "component") fail(source, line.number, t[0].col, "expected 'component' or 'expect'");
        if (t.size() < 3) fail(source, line.number, t[0].col, "component needs a label and file= or gen=");
        ManifestComponent c;
        c.label = std::string(t[1].text);
        c.line = line.number;
        if (!labels.insert(c.label).second) fail(source, line.number, t[1].col, "duplicate label " + c.label);
        for (std::size_t i = 2; i < t.size(); ++i) {
            auto eq = t[i].text.find('=');
            if (eq == std::string_view::npos) fail(source, line.number, t[i].col, "expected key=value");
            auto key = t[i].text.substr(0, eq);
            auto val = std::string(t[i].text.substr(eq + 1));
            if (val.empty()) fail(source, line.number, t[i].col + eq + 1, "empty value");
            if (key == "file") {
                auto p = std::filesystem::path(val);
                c.file = p.is_absolute() || base_dir.empty() ? val : (std::filesystem::path(base_dir) / p).string();
            } else if (key == "gen") {
                c.gen = val;
            } else if (key == "prefix") {
                c.prefix = val;
            } else {
                fail(source, line.number, t[i].col, "unknown key '" + std::string(key) + "'");
            }
        }
        if (c.file.empty() == c.gen.empty()) fail(source, line.number, t[0].col, "give exactly one of file= and gen=");
        if (!c.file.empty() && !c.prefix.empty()) fail(source, line.number, t[0].col, "prefix= only applies to gen=");
        m.components.push_back(std::move(c));
    }
    if (m.components.size() < 2)
        fail(source, 1, 1, "need at least 2 components, got " + std::to_string(m.components.size()));
    return m;
}

NStructure build(const Manifest& m) {
    std::vector<std::pair<std::string, Magma>> parts;
    for (const auto& c : m.components) {
        try {
            parts.emplace_back(c.label, c.file.empty() ? generate(c.gen, c.prefix) : read_cayley(c.file));
        } catch (const Error& e) {
            throw Error(e.code(), "component " + c.label + ": " + e.what());
        }
    }
    return assemble(std::move(parts), m.expect);
}

NStructure load_manifest(const std::string& path) {
    auto dir = std::filesystem::path(path).parent_path().string();
    return build(parse_manifest(slurp(path), path, dir));
}

SubNStructure parse_sub(const NStructure& ns, std::string_view text) {
    SubNStructure h;
    h.slots.resize(ns.size());
    std::vector<bool> given(ns.size(), false);
    for (auto part : split(text, ';')) {
        auto colon = part.find(':');
        if (colon == std::string_view::npos) throw Error(Errc::parse_error, "slot '" + std::string(part) + "' lacks label:");
        auto label = part.substr(0, colon);
        auto body = part.substr(colon + 1);
        std::size_t i = 0;
        while (i < ns.size() && ns.component(i).label != label) ++i;
        if (i == ns.size()) throw Error(Errc::parse_error, "no component labelled '" + std::string(label) + "'");
        if (given[i]) throw Error(Errc::parse_error, "slot " + std::string(label) + " given twice");
        given[i] = true;
        if (body == "-") continue;
        if (body.size() < 2 || body.front() != '{' || body.back() != '}')
            throw Error(Errc::parse_error, "slot " + std::string(label) + " should be {a,b,...} or -");
        const auto& m = ns.component(i).magma;
        ElemSet s(m.size());
        body = body.substr(1, body.size() - 2);
        if (!body.empty())
            for (auto nm : split(body, ',')) {
                auto x = m.find(nm);
                if (!x) throw Error(Errc::element_absent, std::string(nm) + " is not in " + std::string(label));
                s.insert(*x);
            }
        h.slots[i] = std::move(s);
    }
    for (std::size_t i = 0; i < ns.size(); ++i)
        if (!given[i]) throw Error(Errc::parse_error, "slot " + ns.component(i).label + " missing (use label:- for absent)");
    return h;
}

std::string Report::str() const {
    std::string out;
    auto line = [&](std::string_view tag, const Fields& f) {
        out += tag;
        out += ':';
        for (const auto& [k, v] : f) {
            out += ' ';
            out += k;
            out += '=';
            out += clean(v);
        }
        out += '\n';
    };
    for (const auto& f : facts_) line("fact", f);
    line("summary", summary_);
    return out;
}

Report parse_report(std::string_view text) {
    Report r;
    bool closed = false;
    for (const auto& line : content_lines(text)) {
        if (closed) throw Error(Errc::parse_error, "line " + std::to_string(line.number) + ": content after summary");
        const auto& t = line.toks;
        bool is_fact = t[0].text == "fact:";
        if (!is_fact && t[0].text != "summary:")
            throw Error(Errc::parse_error, "line " + std::to_string(line.number) + ": expected fact: or summary:");
        Fields f;
        for (std::size_t i = 1; i < t.size(); ++i) {
            auto eq = t[i].text.find('=');
            if (eq == std::string_view::npos || eq == 0)
                throw Error(Errc::parse_error, "line " + std::to_string(line.number) + ": expected key=value");
            f.emplace_back(std::string(t[i].text.substr(0, eq)), std::string(t[i].text.substr(eq + 1)));
        }
        if (is_fact) {
            r.fact(std::move(f));
        } else {
            r.summary(std::move(f));
            closed = true;
        }
    }
    if (!closed) throw Error(Errc::parse_error, "missing summary line");
    return r;
}

std::optional<std::string> field(const Fields& f, std::string_view key) {
    for (const auto& [k, v] : f)
        if (k == key) return v;
    return std::nullopt;
}

}  // namespace mk
