#ifndef LEXBOOST_TESTS_SUPPORT_HELPERS_H_
#define LEXBOOST_TESTS_SUPPORT_HELPERS_H_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lexboost/corpus.hpp"
#include "lexboost/ocr_pool.hpp"
#include "lexboost/rf_model.hpp"

namespace lexboost::testing {

// Hand-checkable background table: 1000 tokens, minimum count 10.
inline FrequencyTable tiny_ltd() {
  std::istringstream in(
      "the\t800\n"
      "of\t150\n"
      "compiler\t40\n"
      "cat\t10\n");
  return load_frequency_table(in);
}

// Two-document pool over the tiny table: counts compiler=3, the=1, ssa=1.
inline WordPool tiny_pool() {
  std::vector<OcrDocument> docs;
  docs.push_back({"slide1", 0.0, "The compiler, compiler: SSA"});
  docs.push_back({"slide2", 30.0, "compiler"});
  return build_pool(docs);
}

// Builds a valid RfTable from unranked rows: sorts by rf descending with
// word-ascending ties and assigns ranks, so callers can hand in loose rows.
inline RfTable make_table(std::vector<RfRow> rows, RfMode mode) {
  std::sort(rows.begin(), rows.end(), [](const RfRow& a, const RfRow& b) {
    if (a.rf != b.rf) return a.rf > b.rf;
    return a.word < b.word;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].rank = i + 1;
  }
  return RfTable(std::move(rows), mode);
}

// Shorthand for synthetic tables where only word and rf matter.
inline RfRow plain_row(std::string word, double rf_raw, double rf) {
  RfRow r;
  r.word = std::move(word);
  r.count_used = 1;
  r.nf = 0.5;
  r.lf = 0.5;
  r.rf_raw = rf_raw;
  r.rf = rf;
  r.rank = 0;
  return r;
}

// Least-squares slope and intercept via the raw normal equations in extended
// precision. Deliberately a different route from the library's centered sums.
struct OlsOracle {
  double slope;
  double intercept;
  double rse;
};

inline OlsOracle ols_normal_equations(const std::vector<double>& x,
                                      const std::vector<double>& y) {
  const auto n = static_cast<long double>(x.size());
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double xi = x[i];
    const long double yi = y[i];
    sx += xi;
    sy += yi;
    sxx += xi * xi;
    sxy += xi * yi;
  }
  const long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const long double intercept = (sy - slope * sx) / n;
  long double ssr = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double r = static_cast<long double>(y[i]) -
                          (intercept + slope * static_cast<long double>(x[i]));
    ssr += r * r;
  }
  const long double dof = n - 2;
  return {static_cast<double>(slope), static_cast<double>(intercept),
          static_cast<double>(std::sqrt(static_cast<double>(ssr / dof)))};
}

// Full-matrix edit distance, kept naive on purpose as an oracle for the
// library's rolling-row implementation.
inline int edit_distance_matrix(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const int sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[n][m];
}

// Scratch directory that cleans up after itself.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<unsigned> counter{0};
    const auto stamp = std::to_string(
        std::chrono::steady_clock::now().time_since_epoch().count());
    path_ = std::filesystem::temp_directory_path() /
            ("lexboost_" + tag + "_" + stamp + "_" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::string write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
  }

  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace lexboost::testing

#endif  // LEXBOOST_TESTS_SUPPORT_HELPERS_H_
