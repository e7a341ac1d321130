#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fibprod/cli.hpp"

namespace {

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical geometry of fibre products of projective bundles over a curve"};
    std::string input = "-";
    std::string output = "-";
    fibprod::cli::RunOptions options;
    app.add_option("--input", input, "Job file (single job object or array of jobs), '-' for stdin");
    app.add_option("--output", output, "Result file, '-' for stdout");
    app.add_flag("--pretty", options.pretty, "Indent the JSON output");
    app.add_option("--seed", options.seed, "Seed for randomized self-tests");
    app.add_option("--max-rank", options.max_rank, "Largest accepted bundle rank")
        ->check(CLI::Range(2, 1 << 20));
    app.add_option("--threads", options.threads, "Worker threads for batches (0: all cores)");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (input == "-") {
        text = read_all(std::cin);
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "fibprod: cannot open input file '" << input << "'\n";
            return 2;
        }
        text = read_all(in);
    }

    const auto result = fibprod::cli::run_document(text, options);

    if (output == "-") {
        std::cout << result.output;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "fibprod: cannot open output file '" << output << "'\n";
            return 5;
        }
        out << result.output;
    }
    return result.status;
}
