#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "finmet/metric_space.hpp"
#include "finmet/planar.hpp"
#include "finmet/urysohn.hpp"

namespace finmet {

struct ParseError : std::runtime_error {
    int line = 0, column = 0;
    ParseError(const std::string& msg, int ln, int col)
        : std::runtime_error(ln > 0 ? msg + " (line " + std::to_string(ln) + ", column " +
                                          std::to_string(col) + ")"
                                    : msg),
          line(ln), column(col) {}
};

namespace io_detail {

inline double parse_token(const std::string& tok, int line, int col) {
    if (tok == "inf") return inf();
    try {
        size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw ParseError("malformed number '" + tok + "'", line, col);
        if (std::isnan(v)) throw ParseError("NaN entry", line, col);
        if (std::isinf(v)) throw ParseError("use the token 'inf' for infinity", line, col);
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed number '" + tok + "'", line, col);
    } catch (const std::out_of_range&) {
        throw ParseError("number out of range '" + tok + "'", line, col);
    }
}

inline std::pair<int, int> offset_to_line_col(const std::string& text, size_t offset) {
    int line = 1, col = 1;
    for (size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline double json_entry(const nlohmann::json& v, const std::string& text) {
    if (v.is_number()) {
        const double x = v.get<double>();
        if (std::isnan(x)) throw ParseError("NaN entry", 1, 1);
        return x;
    }
    if (v.is_string() && v.get<std::string>() == "inf") return inf();
    (void)text;
    throw ParseError("matrix entries must be numbers or \"inf\"", 1, 1);
}

} // namespace io_detail

// Matrix text format: first line `n`, then n whitespace-separated rows,
// token `inf` for infinity.
inline std::vector<std::vector<double>> parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n = -1;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        if (n < 0) {
            if (!(ls >> tok)) continue;   // skip leading blank lines
            try {
                size_t used = 0;
                n = std::stol(tok, &used);
                if (used != tok.size() || n < 0) throw std::invalid_argument("");
            } catch (...) {
                throw ParseError("expected point count, got '" + tok + "'", lineno, 1);
            }
            std::string extra;
            if (ls >> extra) throw ParseError("unexpected token after point count", lineno, 1);
            continue;
        }
        std::vector<double> row;
        int col = 0;
        while (ls >> tok) {
            ++col;
            row.push_back(io_detail::parse_token(tok, lineno, col));
        }
        if (row.empty()) continue;
        if (row.size() != static_cast<size_t>(n))
            throw ParseError("expected " + std::to_string(n) + " entries in row", lineno, 1);
        rows.push_back(std::move(row));
        if (rows.size() == static_cast<size_t>(n)) break;
    }
    if (n < 0) throw ParseError("empty matrix file", 1, 1);
    if (rows.size() != static_cast<size_t>(n))
        throw ParseError("expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()),
                         lineno, 1);
    return rows;
}

// JSON alternative: {"n":…, "d":[[…]], "labels":[…]}.
inline FiniteMetricSpace parse_matrix_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [ln, col] = io_detail::offset_to_line_col(text, e.byte);
        throw ParseError("invalid JSON", ln, col);
    }
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("d"))
            throw ParseError("matrix JSON needs fields \"n\" and \"d\"", 1, 1);
        const int n = j["n"].get<int>();
        if (n < 0 || !j["d"].is_array() || j["d"].size() != static_cast<size_t>(n))
            throw ParseError("field \"d\" must be an n×n array", 1, 1);
        std::vector<std::vector<double>> rows;
        for (const auto& r : j["d"]) {
            if (!r.is_array() || r.size() != static_cast<size_t>(n))
                throw ParseError("field \"d\" must be an n×n array", 1, 1);
            std::vector<double> row;
            for (const auto& v : r) row.push_back(io_detail::json_entry(v, text));
            rows.push_back(std::move(row));
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) {
            for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
            if (labels.size() != static_cast<size_t>(n))
                throw ParseError("label count mismatch", 1, 1);
        }
        return FiniteMetricSpace::from_rows(rows, std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what(), 1, 1);
    }
}

// Planar cloud file: CSV lines `x,y`.
inline PlanarCloud parse_cloud_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<Point2> pts;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (trimmed.empty()) continue;
        const size_t comma = trimmed.find(',');
        if (comma == std::string::npos) throw ParseError("expected 'x,y'", lineno, 1);
        std::string xs = trimmed.substr(0, comma), ys = trimmed.substr(comma + 1);
        auto strip = [](std::string& s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            const size_t e = s.find_last_not_of(" \t\r");
            if (e != std::string::npos) s.erase(e + 1);
        };
        strip(xs);
        strip(ys);
        Point2 p;
        p.x = io_detail::parse_token(xs, lineno, 1);
        p.y = io_detail::parse_token(ys, lineno, static_cast<int>(comma) + 2);
        if (std::isinf(p.x) || std::isinf(p.y)) throw ParseError("coordinates must be finite", lineno, 1);
        pts.push_back(p);
    }
    if (pts.empty()) throw ParseError("empty cloud file", lineno ? lineno : 1, 1);
    return PlanarCloud(std::move(pts));
}

using ParsedInput = std::variant<FiniteMetricSpace, PlanarCloud>;

// Dispatch on content: '{' starts matrix JSON, a comma in the first data
// line means planar CSV, anything else is matrix text.
inline ParsedInput parse_space_text(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') return parse_matrix_json(text);
    const size_t eol = text.find('\n', i);
    const std::string first = text.substr(i, eol == std::string::npos ? std::string::npos : eol - i);
    if (first.find(',') != std::string::npos) return parse_cloud_csv(text);
    return ParsedInput(FiniteMetricSpace::from_rows(parse_matrix_text(text)));
}

inline std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string read_file_or_stdin(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    return read_stream(in);
}

// ---- emission ------------------------------------------------------------
// Deterministic output: keys in construction order, floats with 12
// significant digits, `"inf"` for infinity.

inline std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// round-trip-exact variant for state snapshots
inline std::string format_double_exact(double v) {
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_escape(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

// Minimal ordered JSON writer; values are appended pre-rendered.
struct JsonBuilder {
    std::string out;
    bool need_comma = false;
    bool exact_doubles = false;   // %.17g for reloadable state files

    void raw(std::string_view s) { out += s; }
    void sep() {
        if (need_comma) out += ',';
        need_comma = false;
    }
    JsonBuilder& begin_obj() { sep(); out += '{'; return *this; }
    JsonBuilder& end_obj() { out += '}'; need_comma = true; return *this; }
    JsonBuilder& begin_arr() { sep(); out += '['; return *this; }
    JsonBuilder& end_arr() { out += ']'; need_comma = true; return *this; }
    JsonBuilder& key(std::string_view k) {
        sep();
        out += json_escape(k);
        out += ':';
        return *this;
    }
    JsonBuilder& value_num(double v) {
        sep();
        out += exact_doubles ? format_double_exact(v) : format_double(v);
        need_comma = true;
        return *this;
    }
    JsonBuilder& value_int(long long v) { sep(); out += std::to_string(v); need_comma = true; return *this; }
    JsonBuilder& value_str(std::string_view s) { sep(); out += json_escape(s); need_comma = true; return *this; }
    JsonBuilder& value_bool(bool b) { sep(); out += b ? "true" : "false"; need_comma = true; return *this; }
    JsonBuilder& value_null() { sep(); out += "null"; need_comma = true; return *this; }
};

inline void emit_matrix_fields(JsonBuilder& jb, const FiniteMetricSpace& s) {
    jb.key("n").value_int(s.n);
    jb.key("d").begin_arr();
    for (int i = 0; i < s.n; ++i) {
        jb.begin_arr();
        for (int j = 0; j < s.n; ++j) jb.value_num(s.at(i, j));
        jb.end_arr();
    }
    jb.end_arr();
    if (!s.labels.empty()) {
        jb.key("labels").begin_arr();
        for (const auto& l : s.labels) jb.value_str(l);
        jb.end_arr();
    }
}

inline std::string emit_matrix_json(const FiniteMetricSpace& s) {
    JsonBuilder jb;
    jb.begin_obj();
    emit_matrix_fields(jb, s);
    jb.end_obj();
    return jb.out;
}

inline std::string emit_matrix_text(const FiniteMetricSpace& s) {
    std::string out = std::to_string(s.n) + "\n";
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) {
            if (j) out += ' ';
            const double v = s.at(i, j);
            if (std::isinf(v)) out += "inf";
            else {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.12g", v);
                out += buf;
            }
        }
        out += '\n';
    }
    return out;
}

// ---- growth state snapshots ----------------------------------------------

inline std::string emit_growth_state(const GrowthState& st) {
    JsonBuilder jb;
    jb.exact_doubles = true;   // resuming must see the exact metric
    jb.begin_obj();
    jb.key("format").value_str("finmet-growth-state");
    jb.key("d_cap").value_num(st.d_cap);
    jb.key("space").begin_obj();
    emit_matrix_fields(jb, st.space);
    jb.end_obj();
    jb.key("history").begin_arr();
    for (const auto& h : st.history) {
        jb.begin_obj();
        jb.key("subset").begin_arr();
        for (int i : h.subset) jb.value_int(i);
        jb.end_arr();
        jb.key("values").begin_arr();
        for (double v : h.values) jb.value_num(v);
        jb.end_arr();
        jb.end_obj();
    }
    jb.end_arr();
    std::ostringstream rs;
    rs << st.rng;
    jb.key("rng").value_str(rs.str());
    jb.end_obj();
    jb.raw("\n");
    return jb.out;
}

inline GrowthState parse_growth_state(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [ln, col] = io_detail::offset_to_line_col(text, e.byte);
        throw ParseError("invalid JSON", ln, col);
    }
    if (!j.is_object() || j.value("format", "") != std::string("finmet-growth-state"))
        throw ParseError("not a growth-state file", 1, 1);
    GrowthState st;
    try {
        st.d_cap = io_detail::json_entry(j.at("d_cap"), text);
        const std::string space_json = j.at("space").dump();
        st.space = parse_matrix_json(space_json);
        for (const auto& h : j.at("history")) {
            HistoryEntry e;
            for (const auto& v : h.at("subset")) e.subset.push_back(v.get<int>());
            for (const auto& v : h.at("values")) e.values.push_back(v.get<double>());
            st.history.push_back(std::move(e));
        }
        std::istringstream rs(j.at("rng").get<std::string>());
        rs >> st.rng;
        if (!rs) throw ParseError("bad rng state", 1, 1);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad growth-state JSON: ") + e.what(), 1, 1);
    }
    const ValidationReport rep = validate(st.space, 1e-9, false, 0);
    if (!rep.ok) throw std::invalid_argument("growth state space is not a valid metric");
    return st;
}

} // namespace finmet
