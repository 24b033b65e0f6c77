#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "twistconj/cli.hpp"
#include "twistconj/errors.hpp"

namespace {

int emit(const twistconj::Envelope& e, const std::string& format)
{
    if (format == "csv")
        std::cout << twistconj::render_csv(e);
    else
        std::cout << twistconj::render_json(e);
    return e.verdict_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"twisted conjugacy classes, Reidemeister numbers and twisted "
                 "characters of Z^2 x| Z, in exact arithmetic"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    std::uint64_t seed = 12345;
    app.add_option("--seed", seed, "seed for sampling-based checks")->capture_default_str();

    auto* classify = app.add_subcommand("classify", "canonical class of an element");
    std::string element;
    std::string twist = "phi";
    classify->add_option("element", element, "element \"((m,k),n)\"")->required();
    classify->add_option("twist", twist, "twist: phi, phi^k, or M=[[a,b],[c,d]];eps=+-1")
        ->capture_default_str();

    auto* reid = app.add_subcommand("reidemeister", "number of twisted conjugacy classes");
    std::string reid_twist = "phi";
    reid->add_option("twist", reid_twist, "twist spec")->capture_default_str();

    app.add_subcommand("chartable", "twisted character table on the four classes");

    auto* congruence = app.add_subcommand("congruence",
                                          "Moebius congruence sweep for an abelian twist");
    std::string matrix = "A";
    long n_max = 12;
    congruence->add_option("matrix", matrix, "matrix: A, A^k, -A, or [[..],[..]]")
        ->capture_default_str();
    congruence->add_option("n_max", n_max, "largest n to check")->capture_default_str();

    auto* orbits = app.add_subcommand("orbits", "invariant finite dual-torus orbits");
    long q_max = 2;
    orbits->add_option("q_max", q_max, "denominator bound")->capture_default_str();

    auto* oracle = app.add_subcommand("oracle", "brute-force sweep cross-validating the "
                                                "analytic classification");
    std::string oracle_twist = "phi";
    twistconj::BoxSpec box;
    int jobs = 1;
    oracle->add_option("--twist", oracle_twist, "twist spec")->capture_default_str();
    oracle->add_option("--v-bound", box.v_bound, "|m|,|k| bound for elements")
        ->capture_default_str();
    oracle->add_option("--n-bound", box.n_bound, "|n| bound for elements")->capture_default_str();
    oracle->add_option("--conj-v-bound", box.conj_v_bound, "|x|,|y| bound for conjugators")
        ->capture_default_str();
    oracle->add_option("--conj-z-bound", box.conj_z_bound, "|z| bound for conjugators")
        ->capture_default_str();
    oracle->add_option("--jobs", jobs, "worker threads for the sweep (0 = all cores)")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed())
            return emit(twistconj::cmd_classify(element, twist), format);
        if (reid->parsed())
            return emit(twistconj::cmd_reidemeister(reid_twist), format);
        if (app.get_subcommand("chartable")->parsed())
            return emit(twistconj::cmd_chartable(), format);
        if (congruence->parsed())
            return emit(twistconj::cmd_congruence(matrix, n_max), format);
        if (orbits->parsed())
            return emit(twistconj::cmd_orbits(q_max), format);
        if (oracle->parsed())
            return emit(twistconj::cmd_oracle(oracle_twist, box, jobs, seed), format);
    } catch (const twistconj::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
