#include "hoct/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "hoct/engine.hpp"
#include "hoct/errors.hpp"
#include "hoct/header_codec.hpp"
#include "hoct/io.hpp"

namespace fs = std::filesystem;

namespace hoct {
namespace {

// lims arrive as doubles but are written with at most millibit precision;
// keying the override map on rounded milli-lims sidesteps float equality.
std::uint64_t lim_key(double lim) {
    return static_cast<std::uint64_t>(std::llround(lim * 1000.0));
}

unsigned env_thread_cap() {
    const char* v = std::getenv("HOCT_THREADS");
    if (!v || !*v) return 0;
    char* end = nullptr;
    const long parsed = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || parsed <= 0) return 0;
    return static_cast<unsigned>(parsed);
}

std::string format_double(double v, int decimals) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << v;
    return os.str();
}

std::string format_lim(double lim) {
    // lims are usually small integers; print them without trailing zeros.
    std::ostringstream os;
    os << lim;
    return os.str();
}

// Both renderers feed from these cells so the table and CSV agree digit for
// digit. Order matches the CSV schema.
std::array<std::string, 9> row_cells(const BenchRow& r) {
    return {r.file,
            format_lim(r.lim),
            std::to_string(r.n),
            format_double(r.h_in, 3),
            format_double(r.h_out, 3),
            std::to_string(r.tree_bytes),
            std::to_string(r.transforms),
            format_double(r.f_ratio, 3),
            format_double(r.elapsed_ms, 1)};
}

constexpr std::array<const char*, 9> kColumns = {
    "file", "lim", "n", "H", "H_t", "tree_bytes", "transforms", "F", "elapsed_ms"};

}  // namespace

void HeaderBitsOverride::set(const std::string& file, double lim, std::uint64_t bits) {
    bits_[{file, lim_key(lim)}] = bits;
}

std::optional<std::uint64_t> HeaderBitsOverride::lookup(const std::string& file,
                                                        double lim) const {
    const auto it = bits_.find({file, lim_key(lim)});
    if (it == bits_.end()) return std::nullopt;
    return it->second;
}

HeaderBitsOverride load_header_bits(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open header-bits file " + path);
    HeaderBitsOverride out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string file;
        if (!(is >> file)) continue;  // blank or comment-only line
        double lim = 0.0;
        std::uint64_t bits = 0;
        if (!(is >> lim >> bits)) {
            throw IoError("bad header-bits line " + std::to_string(lineno) + " in " + path +
                          " (expected: file lim bits)");
        }
        out.set(file, lim, bits);
    }
    return out;
}

double f_ratio(std::uint64_t header_bits, double h_out, std::uint64_t n) {
    if (n == 0) return 0.0;
    return (static_cast<double>(header_bits) + h_out * static_cast<double>(n)) /
           static_cast<double>(n);
}

std::vector<BenchRow> run_bench(const std::string& corpus_dir, const BenchOptions& opt) {
    std::error_code ec;
    if (!fs::is_directory(corpus_dir, ec)) {
        throw IoError("corpus directory not found: " + corpus_dir);
    }

    std::vector<fs::path> files;
    for (const fs::directory_entry& e : fs::directory_iterator(corpus_dir)) {
        if (e.is_regular_file()) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    const std::size_t lim_count = opt.lims.size();
    std::vector<BenchRow> rows(files.size() * lim_count);

    unsigned workers = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (const unsigned cap = env_thread_cap()) workers = std::min(workers, cap);
    workers = std::min<unsigned>(workers, files.empty() ? 1 : static_cast<unsigned>(files.size()));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            const std::size_t fi = next.fetch_add(1);
            if (fi >= files.size()) return;
            try {
                const Bytes input = read_file(files[fi].string());
                const std::string name = files[fi].filename().string();
                for (std::size_t li = 0; li < lim_count; ++li) {
                    const double lim = opt.lims[li];
                    Bytes work = input;
                    EngineConfig cfg;
                    cfg.lim = lim;
                    const auto t0 = std::chrono::steady_clock::now();
                    const TransformSummary sum = transform(work, cfg);
                    const auto t1 = std::chrono::steady_clock::now();

                    BenchRow& row = rows[fi * lim_count + li];
                    row.file = name;
                    row.lim = lim;
                    row.n = input.size();
                    row.h_in = sum.input_entropy;
                    row.h_out = sum.output_entropy;
                    row.tree_bytes = serialize_tree(sum.tree).size();
                    row.transforms = sum.transform_count;
                    const std::uint64_t header_bits =
                        opt.header_bits.lookup(name, lim).value_or(8 * row.tree_bytes);
                    row.f_ratio = f_ratio(header_bits, row.h_out, row.n);
                    row.elapsed_ms =
                        std::chrono::duration<double, std::milli>(t1 - t0).count();
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        if (a.file != b.file) return a.file < b.file;
        return a.lim < b.lim;
    });
    return rows;
}

std::string format_table(const std::vector<BenchRow>& rows) {
    std::array<std::size_t, 9> width{};
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
        width[c] = std::string(kColumns[c]).size();
    }
    std::vector<std::array<std::string, 9>> cells;
    cells.reserve(rows.size());
    for (const BenchRow& r : rows) {
        cells.push_back(row_cells(r));
        for (std::size_t c = 0; c < 9; ++c) width[c] = std::max(width[c], cells.back()[c].size());
    }

    std::ostringstream os;
    auto emit = [&](const auto& line) {
        for (std::size_t c = 0; c < 9; ++c) {
            if (c) os << "  ";
            // File column left-aligned, numbers right-aligned.
            os << (c == 0 ? std::left : std::right) << std::setw(static_cast<int>(width[c]))
               << line[c];
        }
        os << '\n';
    };
    emit(kColumns);
    for (const auto& row : cells) emit(row);
    return os.str();
}

std::string format_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
        if (c) os << ',';
        os << kColumns[c];
    }
    os << '\n';
    for (const BenchRow& r : rows) {
        const auto cells = row_cells(r);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) os << ',';
            os << cells[c];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hoct
