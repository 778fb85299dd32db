#pragma once

// File formats: instance JSON, solve-result JSON, code-info JSON and the
// sweep CSV schemas. Field elements are written as canonical indices only.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopi/agcode.hpp"
#include "hopi/dqi_model.hpp"
#include "hopi/error.hpp"
#include "hopi/instance.hpp"
#include "hopi/solvers.hpp"

namespace hopi {

using Json = nlohmann::ordered_json;

inline constexpr int kInstanceFormatVersion = 1;

inline Json indices(std::span<const Element> v) {
    Json out = Json::array();
    for (auto e : v) out.push_back(e.index());
    return out;
}

inline Json instance_to_json(const Instance& inst) {
    Json j;
    j["version"] = kInstanceFormatVersion;
    j["q"] = inst.q();
    j["t"] = inst.t();
    j["r"] = inst.r();
    j["seed"] = inst.seed();
    Json sets = Json::array();
    for (const auto& s : inst.sets()) sets.push_back(indices(s));
    j["sets"] = std::move(sets);
    return j;
}

/// Compact one-line-per-set rendering, ending in a newline.
inline std::string serialize_instance(const Instance& inst) {
    const Json j = instance_to_json(inst);
    std::string out = "{\"version\":" + j["version"].dump() + ",\"q\":" + j["q"].dump() + ",\"t\":" +
                      j["t"].dump() + ",\"r\":" + j["r"].dump() + ",\"seed\":" + j["seed"].dump() + ",\"sets\":[\n";
    const auto& sets = j["sets"];
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out += sets[i].dump();
        out += i + 1 < sets.size() ? ",\n" : "\n";
    }
    out += "]}\n";
    return out;
}

namespace detail {

template <typename T>
T required(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("bad value for '") + key + "': " + e.what());
    }
}

}  // namespace detail

/// Parses and validates an instance, rebuilding its code from (q, t).
inline Instance parse_instance(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::ParseError, e.what());
    }
    if (!j.is_object()) throw Error(Errc::ParseError, "instance must be a JSON object");
    const auto version = detail::required<int>(j, "version");
    if (version != kInstanceFormatVersion) {
        throw Error(Errc::ParseError, "unsupported instance version " + std::to_string(version));
    }
    const auto q = detail::required<int>(j, "q");
    const auto t = detail::required<long long>(j, "t");
    const auto r = detail::required<int>(j, "r");
    const auto seed = detail::required<std::uint64_t>(j, "seed");
    const auto raw = detail::required<std::vector<std::vector<long long>>>(j, "sets");

    if (!is_supported_q(q)) throw Error(Errc::UnsupportedQ, "q=" + std::to_string(q) + " has no field tables");
    auto code = build_code(q, t);
    std::vector<Vector> sets;
    sets.reserve(raw.size());
    for (const auto& s : raw) {
        Vector v;
        v.reserve(s.size());
        for (auto x : s) {
            if (x < 0 || x >= code->field().order()) throw Error(Errc::ParseError, "set element outside the field");
            v.emplace_back(static_cast<std::uint32_t>(x));
        }
        sets.push_back(std::move(v));
    }
    return Instance(std::move(code), r, seed, std::move(sets));
}

/// Solve output. Wall time is left out so that reruns are byte-identical.
inline Json solve_result_to_json(const Instance& inst, const SolveResult& res) {
    Json j;
    j["algorithm"] = res.algorithm;
    j["q"] = inst.q();
    j["t"] = inst.t();
    j["r"] = inst.r();
    j["n"] = inst.n();
    j["k"] = inst.k();
    j["instance_seed"] = inst.seed();
    j["seed"] = res.seed;
    j["trials"] = res.trials;
    j["satisfied"] = res.satisfied;
    j["msg"] = indices(res.msg);
    if (!res.information_set.empty()) j["information_set"] = res.information_set;
    return j;
}

inline Json code_info_json(const HermitianCode& code) {
    Json j;
    j["q"] = code.q();
    j["t"] = code.t();
    j["n"] = code.n();
    j["k"] = code.k();
    j["d_designed"] = code.d_designed();
    j["t_dual"] = code.t_dual();
    Json basis = Json::array();
    for (const auto& m : code.basis()) basis.push_back(Json::array({m.a, m.b}));
    j["basis"] = std::move(basis);
    return j;
}

inline std::string format_fraction(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%#.15g", v);
    return buf;
}

/// Integral values print without a fractional part.
inline std::string format_size(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) return std::to_string(static_cast<long long>(v));
    return format_fraction(v);
}

inline const std::vector<std::string>& fig1a_columns() {
    static const std::vector<std::string> c{"q", "n", "t", "k", "rate", "ell", "dqi_frac", "prange_frac"};
    return c;
}
inline const std::vector<std::string>& fig1b_columns() {
    static const std::vector<std::string> c{"q", "n", "k", "rate", "ell", "dqi_frac", "prange_frac"};
    return c;
}
inline const std::vector<std::string>& fig2_columns() {
    static const std::vector<std::string> c{"q", "n", "r", "r_frac", "dqi_frac", "prange_frac", "ratio"};
    return c;
}

namespace detail {

inline void write_header(std::ostream& os, const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
}

}  // namespace detail

inline void write_fig1a_csv(std::ostream& os, const std::vector<ModelPoint>& pts) {
    detail::write_header(os, fig1a_columns());
    for (const auto& p : pts) {
        os << p.q << ',' << p.n << ',' << p.t << ',' << p.k << ',' << format_fraction(p.rate) << ',' << p.ell << ','
           << format_fraction(p.dqi_frac) << ',' << format_fraction(p.prange_frac) << '\n';
    }
}

inline void write_fig1b_csv(std::ostream& os, const std::vector<ModelPoint>& pts) {
    detail::write_header(os, fig1b_columns());
    for (const auto& p : pts) {
        os << p.q << ',' << p.n << ',' << p.k << ',' << format_fraction(p.rate) << ',' << p.ell << ','
           << format_fraction(p.dqi_frac) << ',' << format_fraction(p.prange_frac) << '\n';
    }
}

inline void write_fig2_csv(std::ostream& os, const std::vector<ModelPoint>& pts) {
    detail::write_header(os, fig2_columns());
    for (const auto& p : pts) {
        os << p.q << ',' << p.n << ',' << format_size(p.r) << ',' << format_fraction(p.r_frac) << ','
           << format_fraction(p.dqi_frac) << ',' << format_fraction(p.prange_frac) << ','
           << format_fraction(p.ratio) << '\n';
    }
}

}  // namespace hopi
