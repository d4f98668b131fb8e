#pragma once

#include <cstdio>
#include <string>

#include "mellin/identities.hpp"

namespace mellin {

namespace detail {

inline void json_escape(std::string& out, const std::string& s) {
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
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
}

inline void append_num(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

inline void append_complex_json(std::string& out, Complex v) {
    out += "{\"im\":";
    append_num(out, v.imag());
    out += ",\"re\":";
    append_num(out, v.real());
    out += "}";
}

inline void csv_field(std::string& out, const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        out += s;
        return;
    }
    out += '"';
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

}  // namespace detail

// Object keys are emitted in lexicographic order and numbers with %.17g,
// so two reports from identical runs compare equal byte for byte.
// wall_time_s is zeroed unless include_timing is set; wall time is the
// one field that would otherwise differ between identical runs.
inline std::string report_json(const Report& rep, bool include_timing = false) {
    std::string out = "{\"n_fail\":";
    out += std::to_string(rep.n_fail);
    out += ",\"n_pass\":";
    out += std::to_string(rep.n_pass);
    out += ",\"results\":[";
    bool first = true;
    for (const auto& r : rep.results) {
        if (!first) out += ",";
        first = false;
        out += "{\"abs_err\":";
        detail::append_num(out, r.abs_err);
        out += ",\"id\":\"";
        detail::json_escape(out, r.id);
        out += "\",\"lhs\":";
        detail::append_complex_json(out, r.lhs);
        out += ",\"note\":\"";
        detail::json_escape(out, r.note);
        out += "\",\"params\":\"";
        detail::json_escape(out, r.params);
        out += "\",\"pass\":";
        out += r.pass ? "true" : "false";
        out += ",\"rel_err\":";
        detail::append_num(out, r.rel_err);
        out += ",\"rhs\":";
        detail::append_complex_json(out, r.rhs);
        out += "}";
    }
    out += "],\"seed\":";
    out += std::to_string(rep.seed);
    out += ",\"wall_time_s\":";
    detail::append_num(out, include_timing ? rep.wall_time_s : 0.0);
    out += "}";
    return out;
}

inline std::string report_csv(const Report& rep) {
    std::string out =
        "id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass,note\n";
    for (const auto& r : rep.results) {
        detail::csv_field(out, r.id);
        out += ',';
        detail::csv_field(out, r.params);
        out += ',';
        detail::append_num(out, r.lhs.real());
        out += ',';
        detail::append_num(out, r.lhs.imag());
        out += ',';
        detail::append_num(out, r.rhs.real());
        out += ',';
        detail::append_num(out, r.rhs.imag());
        out += ',';
        detail::append_num(out, r.abs_err);
        out += ',';
        detail::append_num(out, r.rel_err);
        out += ',';
        out += r.pass ? "true" : "false";
        out += ',';
        detail::csv_field(out, r.note);
        out += '\n';
    }
    return out;
}

inline std::string report_plain(const Report& rep, bool include_timing = false) {
    std::string out;
    char buf[64];
    for (const auto& r : rep.results) {
        out += r.pass ? "pass  " : "FAIL  ";
        out += r.id;
        out += "  ";
        out += r.params;
        std::snprintf(buf, sizeof buf, "  abs %.3g rel %.3g", r.abs_err,
                      r.rel_err);
        out += buf;
        if (!r.note.empty()) {
            out += "  [";
            out += r.note;
            out += "]";
        }
        out += '\n';
    }
    std::snprintf(buf, sizeof buf, "%d passed, %d failed, seed %llu", rep.n_pass,
                  rep.n_fail, static_cast<unsigned long long>(rep.seed));
    out += buf;
    if (include_timing) {
        std::snprintf(buf, sizeof buf, ", %.3f s", rep.wall_time_s);
        out += buf;
    }
    out += '\n';
    return out;
}

}  // namespace mellin
