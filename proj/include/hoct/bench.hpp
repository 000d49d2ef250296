#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hoct {

// One file x lim measurement. Entropies in bits/byte; f_ratio folds the
// header cost in: (header_bits + h_out * n) / n.
struct BenchRow {
    std::string file;  // basename
    double lim = 0.0;
    std::uint64_t n = 0;
    double h_in = 0.0;
    double h_out = 0.0;
    std::uint64_t tree_bytes = 0;
    std::uint64_t transforms = 0;
    double f_ratio = 0.0;
    double elapsed_ms = 0.0;
};

// Externally measured header sizes (e.g. after compressing the tree with a
// strong coder), keyed by file basename and lim. When present they replace
// 8 * tree_bytes in the F ratio.
class HeaderBitsOverride {
public:
    void set(const std::string& file, double lim, std::uint64_t bits);
    std::optional<std::uint64_t> lookup(const std::string& file, double lim) const;

    bool empty() const { return bits_.empty(); }

private:
    std::map<std::pair<std::string, std::uint64_t>, std::uint64_t> bits_;
};

// Sidecar format: one `file lim bits` triple per line; '#' starts a comment.
HeaderBitsOverride load_header_bits(const std::string& path);

double f_ratio(std::uint64_t header_bits, double h_out, std::uint64_t n);

struct BenchOptions {
    std::vector<double> lims{0, 4, 8};
    // Worker cap; 0 means hardware concurrency. The HOCT_THREADS environment
    // variable, when set, lowers this further.
    unsigned threads = 0;
    HeaderBitsOverride header_bits;
};

// Transforms every regular file in the directory at every lim. Files run in
// parallel workers; rows come back sorted by (file, lim) regardless of
// scheduling. Throws IoError if the directory cannot be read.
std::vector<BenchRow> run_bench(const std::string& corpus_dir, const BenchOptions& opt);

// Renderers share one number formatter so the table and the CSV can never
// disagree on a digit.
std::string format_table(const std::vector<BenchRow>& rows);
std::string format_csv(const std::vector<BenchRow>& rows);

}  // namespace hoct
