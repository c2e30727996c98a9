#include "common.hh"

#include <exception>
#include <iostream>

// Exit codes: 0 success, 2 invalid input or configuration, 3 a numeric
// routine failed to converge at its escalation ceiling.
int main(int argc, char** argv) {
    CLI::App app{"Sheffer sequences from quadratic generators, Riordan-array "
                 "combinatorics, and critical-line verification"};
    app.fallthrough();
    app.require_subcommand(1);

    shqcli::global g;
    app.add_option("--precision", g.precision, "working precision in bits (>= 64)");
    app.add_option("--jobs", g.jobs, "parallel workers for sweeps (0 = all cores)");
    app.add_option("-o,--output", g.output, "write output to a file instead of stdout");

    shqcli::register_sheffer(app, g);
    shqcli::register_riordan(app, g);
    shqcli::register_combinat(app, g);
    shqcli::register_analysis(app, g);
    shqcli::register_zeros(app, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
