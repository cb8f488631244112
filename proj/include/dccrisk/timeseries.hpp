#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace dccrisk {

// Panel of asset log-returns in percent. Immutable after construction and
// safe to share across threads.
struct ReturnPanel {
    std::vector<std::string> dates;   // ISO-8601, strictly increasing
    std::vector<std::string> assets;  // unique identifiers
    Eigen::MatrixXd values;           // T x n

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }

    // Validates the invariants (T >= 2, n >= 1, unique assets, increasing
    // dates, finite cells) and returns the panel.
    static ReturnPanel make(std::vector<std::string> dates,
                            std::vector<std::string> assets,
                            Eigen::MatrixXd values);
};

struct PortfolioWeights {
    Eigen::VectorXd w;

    Eigen::Index size() const { return w.size(); }

    // Weights must sum to 1 within 1e-10; long-only by default, with
    // allow_short widening the per-asset range to [-1, 1].
    static PortfolioWeights make(Eigen::VectorXd w, bool allow_short = false);
    static PortfolioWeights equal(Eigen::Index n);
};

// Rolling scheme: fixed in-sample size, out_size one-step forecasts,
// parameters re-estimated every `step` windows.
struct WindowSpec {
    int in_size = 0;
    int out_size = 0;
    int step = 1;
};

// Reads a return panel from CSV (header `date,ASSET1,...`; ISO dates). With
// prices_to_returns the cells are treated as price levels and converted to
// 100 * log differences, dropping the first row.
ReturnPanel load_panel(const std::string& path, bool prices_to_returns = false);

void save_panel(const ReturnPanel& panel, const std::string& path);

// Subtracts per-column sample means; returns the centered panel and the means.
std::pair<ReturnPanel, Eigen::VectorXd> demean(const ReturnPanel& panel);

// w'r_t for every t.
Eigen::VectorXd portfolio_returns(const ReturnPanel& panel, const PortfolioWeights& w);

// Rows [start, start + len) as a new panel.
ReturnPanel slice_rows(const ReturnPanel& panel, Eigen::Index start, Eigen::Index len);

}  // namespace dccrisk
