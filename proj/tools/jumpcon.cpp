// jumpcon: jumping conics of Hulsbergen bundles on the quadric x0*x3 = x1*x2.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jumpcon/commands.hpp"

namespace {

using jumpcon::cli::CommandResult;

int emit(const CommandResult& r, const std::string& format) {
    if (format == "text")
        std::cout << jumpcon::cli::render_text(r.output);
    else
        std::cout << r.output.dump(2) << "\n";
    if (r.exit_code != jumpcon::cli::kExitOk && r.output.contains("error"))
        std::cerr << "jumpcon: " << r.output["error"].get<std::string>() << "\n";
    return r.exit_code;
}

CommandResult with_input(const std::string& path, const auto& body) {
    return jumpcon::cli::guarded([&] { return body(jumpcon::cli::read_json_file(path)); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jumpcon: jumping-conic loci of rank-2 bundles on the quadric x0*x3 = x1*x2"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::string input;
    bool check_closed_form = false;
    auto* surface = app.add_subcommand("surface", "Equation of the jumping-conic hypersurface S(E)");
    surface->add_option("--input", input, "Instance JSON file")->required();
    surface->add_flag("--check-closed-form", check_closed_form, "Compare det(delta) with the closed form");

    std::string plane_text;
    auto* plane = app.add_subcommand("plane", "Corank and splitting type of E on one plane section");
    plane->add_option("--input", input, "Instance JSON file")->required();
    plane->add_option("--plane", plane_text, "Plane coordinates \"a,b,c,d\"")->required();

    auto* singular = app.add_subcommand("singular", "Singularity test at the planes through triples of Z");
    singular->add_option("--input", input, "Instance JSON file")->required();

    auto* cone = app.add_subcommand("cone", "Quadric cone and vertex of S(E) for c2 = 3");
    cone->add_option("--input", input, "Instance JSON file")->required();

    double tol = 1e-9;
    int starts = 32;
    auto* poncelet = app.add_subcommand("poncelet", "Poncelet report for the conics C(E) and C_H* (c2 = 3)");
    poncelet->add_option("--input", input, "Instance JSON file")->required();
    poncelet->add_option("--tol", tol, "Relative tolerance of the numeric closure oracle");
    poncelet->add_option("--starts", starts, "Starting points of the numeric closure oracle")->check(CLI::PositiveNumber);

    std::size_t k = 0;
    std::uint64_t seed = 0;
    bool avoid_rulings = false;
    auto* random = app.add_subcommand("random", "Deterministic pseudorandom instance");
    random->add_option("--k", k, "Number of points (c2)")->required();
    random->add_option("--seed", seed, "Seed")->required();
    random->add_flag("--avoid-rulings", avoid_rulings, "Resample until the instance is in general position");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return jumpcon::cli::kExitInput;
    }

    using namespace jumpcon::cli;
    if (*surface) return emit(with_input(input, [&](const auto& j) { return cmd_surface(j, check_closed_form); }), format);
    if (*plane) return emit(with_input(input, [&](const auto& j) { return cmd_plane(j, plane_text); }), format);
    if (*singular) return emit(with_input(input, [](const auto& j) { return cmd_singular(j); }), format);
    if (*cone) return emit(with_input(input, [](const auto& j) { return cmd_cone(j); }), format);
    if (*poncelet) return emit(with_input(input, [&](const auto& j) { return cmd_poncelet(j, tol, starts); }), format);
    return emit(cmd_random(k, seed, avoid_rulings), format);
}
