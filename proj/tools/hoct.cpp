// hoct: transform byte files into a lower-entropy form and back.
//
// Exit codes: 0 success, 2 I/O failure, 3 malformed container/header,
// 4 verification failure, anything else = usage error.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hoct/bench.hpp"
#include "hoct/core.hpp"
#include "hoct/engine.hpp"
#include "hoct/entropy.hpp"
#include "hoct/errors.hpp"
#include "hoct/header_codec.hpp"
#include "hoct/inverse.hpp"
#include "hoct/io.hpp"

namespace {

constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;
constexpr int kExitVerification = 4;

std::string printable(std::uint8_t b) {
    if (std::isprint(b)) return std::string("'") + static_cast<char>(b) + "'";
    char buf[8];
    std::snprintf(buf, sizeof buf, "0x%02X", b);
    return buf;
}

struct TransformArgs {
    std::string input;
    std::string output;
    double lim = 0.0;
    std::vector<int> protected_bytes;
    bool verify = false;
};

int run_transform(const TransformArgs& a) {
    hoct::Bytes m = hoct::read_file(a.input);
    const std::uint64_t n = m.size();

    hoct::EngineConfig cfg;
    cfg.lim = a.lim;
    cfg.verify_round_trip = a.verify;
    for (int b : a.protected_bytes) cfg.protected_symbols.set(static_cast<std::size_t>(b));

    const hoct::TransformSummary sum = hoct::transform(m, cfg);

    hoct::Container c;
    c.tree_bytes = hoct::serialize_tree(sum.tree);
    c.payload = std::move(m);

    std::ofstream out(a.output, std::ios::binary | std::ios::trunc);
    if (!out) throw hoct::IoError("cannot open " + a.output + " for writing");
    hoct::write_container(out, c);
    out.flush();
    if (!out) throw hoct::IoError("write failed on " + a.output);

    std::cout << "n:          " << n << "\n"
              << "H_in:       " << std::fixed << std::setprecision(4) << sum.input_entropy
              << " bits/byte\n"
              << "H_out:      " << sum.output_entropy << " bits/byte\n"
              << "tree_bytes: " << c.tree_bytes.size() << "\n"
              << "transforms: " << sum.transform_count << "\n";
    if (a.verify) std::cout << "verify:     round-trip ok\n";
    return 0;
}

int run_restore(const std::string& input, const std::string& output) {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw hoct::IoError("cannot open " + input + " for reading");
    hoct::Container c = hoct::read_container(in);

    const hoct::CtTree tree = hoct::deserialize_tree(c.tree_bytes);
    hoct::Bytes m = std::move(c.payload);
    hoct::restore(m, tree);
    hoct::write_file(output, m);

    std::cout << "restored " << m.size() << " bytes to " << output << "\n";
    return 0;
}

int run_analyze(const std::string& input, std::size_t top) {
    const hoct::Bytes m = hoct::read_file(input);
    const hoct::SymbolCounts counts = hoct::count_symbols(m);
    const std::vector<std::uint8_t> order = hoct::sorted_symbols(counts);

    std::cout << "n:        " << counts.total << "\n"
              << "distinct: " << order.size() << "\n"
              << "H:        " << std::fixed << std::setprecision(4)
              << hoct::shannon_entropy(counts) << " bits/byte\n";

    const std::size_t k = std::min(top, order.size());
    if (k > 0) {
        std::cout << "top " << k << " symbols:\n";
        for (std::size_t i = 0; i < k; ++i) {
            const std::uint8_t b = order[i];
            std::cout << "  " << std::left << std::setw(6) << printable(b) << std::right
                      << std::setw(10) << counts.count[b] << "  " << std::fixed
                      << std::setprecision(2) << 100.0 * counts.probability(b) << "%\n";
        }
    }
    return 0;
}

struct BenchArgs {
    std::string corpus_dir;
    std::vector<double> lims{0, 4, 8};
    std::string header_bits_file;
    std::string csv_path;
    unsigned threads = 0;
};

int run_bench(const BenchArgs& a) {
    hoct::BenchOptions opt;
    opt.lims = a.lims;
    opt.threads = a.threads;
    if (!a.header_bits_file.empty()) {
        opt.header_bits = hoct::load_header_bits(a.header_bits_file);
    }

    const std::vector<hoct::BenchRow> rows = hoct::run_bench(a.corpus_dir, opt);
    std::cout << hoct::format_table(rows);

    const std::string csv = hoct::format_csv(rows);
    if (!a.csv_path.empty()) {
        std::ofstream f(a.csv_path, std::ios::trunc);
        if (!f) throw hoct::IoError("cannot open " + a.csv_path + " for writing");
        f << csv;
        f.flush();
        if (!f) throw hoct::IoError("write failed on " + a.csv_path);
    } else {
        std::cout << "\n" << csv;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lossless context-transformation preprocessor: lowers the zero-order entropy "
                 "of byte files and inverts exactly"};
    app.require_subcommand(1);

    TransformArgs targs;
    CLI::App* t = app.add_subcommand("transform", "Transform a file into a .hoct container");
    t->add_option("input", targs.input, "File to transform")->required();
    t->add_option("output", targs.output, "Container to write")->required();
    t->add_option("--lim", targs.lim,
                  "Minimum total bit savings per applied exchange (larger = fewer exchanges)")
        ->check(CLI::NonNegativeNumber);
    t->add_option("--protected", targs.protected_bytes,
                  "Byte values (0-255) excluded from every exchange pair")
        ->check(CLI::Range(0, 255));
    t->add_flag("--verify", targs.verify, "Restore in memory afterwards and compare");

    std::string rin, rout;
    CLI::App* r = app.add_subcommand("restore", "Restore the original file from a container");
    r->add_option("input", rin, "Container to read")->required();
    r->add_option("output", rout, "File to write")->required();

    std::string ain;
    std::size_t atop = 10;
    CLI::App* an = app.add_subcommand("analyze", "Report zero-order statistics of a file");
    an->add_option("input", ain, "File to analyze")->required();
    an->add_option("--top", atop, "How many of the most frequent symbols to list");

    BenchArgs bargs;
    CLI::App* b = app.add_subcommand("bench", "Transform every file in a directory at several lims");
    b->add_option("corpus", bargs.corpus_dir, "Directory of files to measure")->required();
    b->add_option("--lims", bargs.lims, "lim values to sweep")->delimiter(',');
    b->add_option("--header-bits-file", bargs.header_bits_file,
                  "Sidecar with externally measured header sizes: lines of `file lim bits`");
    b->add_option("--csv", bargs.csv_path, "Write the CSV here instead of stdout");
    b->add_option("--threads", bargs.threads,
                  "Worker cap, 0 = all cores (HOCT_THREADS caps it too)");

    try {
        app.parse(argc, argv);
        if (t->parsed()) return run_transform(targs);
        if (r->parsed()) return run_restore(rin, rout);
        if (an->parsed()) return run_analyze(ain, atop);
        if (b->parsed()) return run_bench(bargs);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const hoct::VerificationError& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const hoct::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const hoct::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
