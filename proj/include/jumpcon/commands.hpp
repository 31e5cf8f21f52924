#pragma once

// The jumpcon command set as plain functions: each takes parsed input and
// returns an exit code together with the JSON document to print. The
// executable in tools/ only parses flags and handles I/O.
//
// Exit codes: 0 success, 2 input error, 3 precondition or degeneracy, 1 internal.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jumpcon/errors.hpp"
#include "jumpcon/hulsbergen.hpp"
#include "jumpcon/json_io.hpp"
#include "jumpcon/jump_surface.hpp"
#include "jumpcon/poncelet.hpp"
#include "jumpcon/quadric.hpp"
#include "jumpcon/random.hpp"

namespace jumpcon::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDegenerate = 3;

struct CommandResult {
    int exit_code = kExitOk;
    json output;
};

inline CommandResult failure(int code, const std::string& message, const std::vector<std::string>& flags = {}) {
    json out{{"error", message}};
    if (!flags.empty()) out["flags"] = flags;
    return {code, out};
}

/// Runs a command body and maps library errors onto the exit-code contract.
inline CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const InputError& e) {
        return failure(kExitInput, e.what());
    } catch (const json::exception& e) {
        return failure(kExitInput, std::string("invalid JSON: ") + e.what());
    } catch (const DegenerateError& e) {
        return failure(kExitDegenerate, e.what(), e.flags());
    } catch (const DomainError& e) {
        return failure(kExitDegenerate, e.what());
    } catch (const std::exception& e) {
        return failure(kExitInternal, std::string("internal error: ") + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file \"" + path + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

/// "a,b,c,d" with rational entries.
inline Plane parse_plane(const std::string& text) {
    RatVector y;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        y.push_back(parse_rational(first == std::string::npos ? "" : item.substr(first, last - first + 1)));
    }
    if (y.size() != 4) throw InputError("plane \"" + text + "\": expected four comma-separated rationals");
    return Plane(std::move(y));
}

inline bool matrices_proportional(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    RatVector fa, fb;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            fa.push_back(a(i, j));
            fb.push_back(b(i, j));
        }
    return projectively_equal(fa, fb);
}

inline CommandResult cmd_surface(const json& instance, bool check_closed_form) {
    return guarded([&] {
        const HulsbergenData d = io::decode_instance(instance);
        const JumpingSurface s = jumping_polynomial(d);
        json out{{"k", d.k()},
                 {"degree", s.degree},
                 {"equation", io::encode(s.equation)},
                 {"equation_text", s.equation.to_string()},
                 {"flags", validate(d).strings()}};
        if (check_closed_form) out["closed_form_proportional"] = proportional(s.equation, closed_form(d));
        if (d.k() == 3) out["cone"] = io::encode(cone_gram(s));
        return CommandResult{kExitOk, out};
    });
}

inline CommandResult cmd_plane(const json& instance, const std::string& plane_text) {
    return guarded([&] {
        const HulsbergenData d = io::decode_instance(instance);
        const Plane h = parse_plane(plane_text);
        const std::size_t corank = corank_at(d, h);
        json out{{"plane", io::encode(h.y)}, {"jumping", corank > 0}, {"corank", corank}};
        const ConicSection section = conic_section(h);
        if (section.kind == ConicSection::Kind::smooth) {
            const auto [a1, a2] = splitting_type(d, h);
            out["section"] = "smooth";
            out["splitting_type"] = {a1, a2};
        } else {
            out["section"] = "line_pair";
            out["tangency_point"] = io::encode(*section.vertex);
        }
        return CommandResult{kExitOk, out};
    });
}

inline CommandResult cmd_singular(const json& instance) {
    return guarded([&] {
        const HulsbergenData d = io::decode_instance(instance);
        if (d.k() < 3) return failure(kExitDegenerate, "singular: requires k ≥ 3, got k = " + std::to_string(d.k()));
        const auto planes = triple_plane_singularities(d);
        json list = json::array();
        std::size_t singular = 0;
        bool distinct = true;
        for (std::size_t i = 0; i < planes.size(); ++i) {
            const auto& t = planes[i];
            singular += t.singular ? 1 : 0;
            for (std::size_t j = 0; j < i; ++j) distinct = distinct && !(planes[j].plane == t.plane);
            list.push_back({{"triple", t.triple}, {"plane", io::encode(t.plane.y)}, {"singular", t.singular}});
        }
        json out{{"k", d.k()},
                 {"count", planes.size()},
                 {"singular_count", singular},
                 {"pairwise_distinct", distinct},
                 {"planes", list}};
        return CommandResult{kExitOk, out};
    });
}

inline CommandResult cmd_cone(const json& instance) {
    return guarded([&] {
        const HulsbergenData d = io::decode_instance(instance);
        if (d.k() != 3) return failure(kExitDegenerate, "cone: requires k = 3, got k = " + std::to_string(d.k()));
        const ConeData cone = cone_data(d);
        const std::size_t corank = corank_at(d, *cone.vertex);
        json out{{"cone", io::encode(cone)},
                 {"vertex_is_plane_through_z", *cone.vertex == plane_through(d.points()[0], d.points()[1], d.points()[2])},
                 {"corank_at_vertex", corank}};
        if (conic_section(*cone.vertex).kind == ConicSection::Kind::smooth) {
            const auto [a1, a2] = splitting_type(d, *cone.vertex);
            out["splitting_at_vertex"] = {a1, a2};
        }
        return CommandResult{kExitOk, out};
    });
}

inline CommandResult cmd_poncelet(const json& instance, double tol, int starts) {
    return guarded([&] {
        const HulsbergenData d = io::decode_instance(instance);
        if (d.k() != 3) return failure(kExitDegenerate, "poncelet: requires k = 3, got k = " + std::to_string(d.k()));
        const auto& z = d.points();
        const Plane h = plane_through(z[0], z[1], z[2]);
        if (is_tangent_plane(h)) {
            const ValidationReport report = validate(d);
            std::string message = "poncelet: ";
            if (report.has(ValidationFlag::Kind::collinear_pair))
                message += "two points of Z lie on a line of Q, so E is strictly semi-stable; ";
            message += "the plane H_E through Z is tangent to Q (H_E lies on Q*), so the vertex q_E lies on f_Q(H_E) "
                       "and projection needs a plane not containing q_E";
            return failure(kExitDegenerate, message, report.strings());
        }
        const ConeData cone = cone_data(d);
        const EmbeddedPlane frame = polar_frame(h);
        const PlaneConic outer = project_cone(cone, frame);
        const PlaneConic inner = dual_conic(h);
        const std::array<RatVector, 3> lines{dual_line(z[0], frame), dual_line(z[1], frame), dual_line(z[2], frame)};
        const auto triangle = triangle_vertices(lines);
        const PlaneConic embedded = embed_extension({d.coeffs()[0], d.coeffs()[1], d.coeffs()[2]}, lines, frame);

        json tangency = json::array(), incidence = json::array(), line_list = json::array(), vertex_list = json::array();
        for (const auto& l : lines) {
            tangency.push_back(tangency_check(l, inner));
            line_list.push_back(io::encode(l));
        }
        for (const auto& p : triangle) {
            incidence.push_back(incident(p, outer));
            vertex_list.push_back(io::encode(p));
        }
        const auto cubic = pencil_cubic(outer, inner);
        json out{{"cone", io::encode(cone)},
                 {"base_plane", io::encode(h.y)},
                 {"outer", io::encode(outer)},
                 {"inner", io::encode(inner)},
                 {"dual_lines", line_list},
                 {"triangle", vertex_list},
                 {"pencil_cubic", io::encode(RatVector(cubic.begin(), cubic.end()))},
                 {"embedding_matches_projection", matrices_proportional(embedded.gram, outer.gram)},
                 {"veronese_rank", veronese_rank(outer)},
                 {"poncelet",
                  {{"cayley", to_string(cayley_triangle_invariant(outer, inner))},
                   {"darboux_literal", to_string(darboux_charpoly_invariant(outer, inner))},
                   {"closure", to_string(closure_oracle_numeric(outer, inner, starts, tol))},
                   {"tangency", tangency},
                   {"incidence", incidence}}}};
        return CommandResult{kExitOk, out};
    });
}

inline CommandResult cmd_random(std::size_t k, std::uint64_t seed, bool avoid_rulings) {
    return guarded([&] {
        if (k < 1) throw InputError("random: --k must be at least 1");
        return CommandResult{kExitOk, io::encode_instance(random_instance(k, seed, avoid_rulings), seed)};
    });
}

/// Human rendering of a command's JSON: one "path: value" line per leaf.
inline std::string render_text(const json& j, const std::string& prefix = {}) {
    std::string out;
    const bool leaf_array = j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
    if (j.is_primitive() || leaf_array) {
        std::string value;
        if (j.is_string())
            value = j.get<std::string>();
        else if (leaf_array) {
            for (const auto& x : j) value += (value.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
            value = "[" + value + "]";
        } else
            value = j.dump();
        return prefix + ": " + value + "\n";
    }
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            out += render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    } else {
        for (std::size_t i = 0; i < j.size(); ++i) out += render_text(j[i], prefix + "[" + std::to_string(i) + "]");
    }
    return out;
}

}  // namespace jumpcon::cli
