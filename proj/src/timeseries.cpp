#include "dccrisk/timeseries.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "dccrisk/errors.hpp"
#include "dccrisk/io.hpp"

namespace dccrisk {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool looks_like_iso_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

ReturnPanel ReturnPanel::make(std::vector<std::string> dates,
                              std::vector<std::string> assets,
                              Eigen::MatrixXd values) {
    if (values.rows() < 2) throw IngestError("panel needs at least two rows");
    if (values.cols() < 1) throw IngestError("panel needs at least one asset");
    if (static_cast<Eigen::Index>(dates.size()) != values.rows())
        throw DimError("date count does not match row count");
    if (static_cast<Eigen::Index>(assets.size()) != values.cols())
        throw DimError("asset count does not match column count");
    for (std::size_t i = 1; i < dates.size(); ++i)
        if (!(dates[i - 1] < dates[i]))
            throw IngestError("dates not strictly increasing at row " + std::to_string(i + 1));
    std::set<std::string> unique(assets.begin(), assets.end());
    if (unique.size() != assets.size()) throw IngestError("duplicate asset identifier");
    if (!values.allFinite()) throw IngestError("panel contains non-finite values");
    ReturnPanel panel;
    panel.dates = std::move(dates);
    panel.assets = std::move(assets);
    panel.values = std::move(values);
    return panel;
}

PortfolioWeights PortfolioWeights::make(Eigen::VectorXd w, bool allow_short) {
    if (w.size() < 1) throw DimError("weights must be non-empty");
    const double lo = allow_short ? -1.0 : 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i)
        if (!(w[i] >= lo && w[i] <= 1.0))
            throw DomainError("weight " + std::to_string(i) + " outside [" +
                              (allow_short ? std::string("-1") : std::string("0")) + ",1]");
    if (std::fabs(w.sum() - 1.0) > 1e-10)
        throw DomainError("weights must sum to 1 within 1e-10");
    return PortfolioWeights{std::move(w)};
}

PortfolioWeights PortfolioWeights::equal(Eigen::Index n) {
    return PortfolioWeights{Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n))};
}

ReturnPanel load_panel(const std::string& path, bool prices_to_returns) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw IngestError(path + ": empty file");
    auto header = split_csv_line(line);
    if (header.size() < 2) throw IngestError(path + ": header needs date plus one asset");
    if (trim(header[0]) != "date") throw IngestError(path + ": first header column must be 'date'");
    std::vector<std::string> assets(header.begin() + 1, header.end());
    for (auto& a : assets) a = trim(a);

    std::vector<std::string> dates;
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw IngestError(path + ":" + std::to_string(line_no) + ": expected " +
                              std::to_string(header.size()) + " fields, got " +
                              std::to_string(fields.size()));
        const std::string date = trim(fields[0]);
        if (!looks_like_iso_date(date))
            throw IngestError(path + ":" + std::to_string(line_no) + ": bad date '" + date + "'");
        std::vector<double> row(assets.size());
        for (std::size_t j = 1; j < fields.size(); ++j) {
            const std::string cell = trim(fields[j]);
            if (cell.empty())
                throw IngestError(path + ":" + std::to_string(line_no) + ": missing cell in column '" +
                                  assets[j - 1] + "'");
            std::size_t consumed = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (consumed != cell.size() || !std::isfinite(v))
                throw IngestError(path + ":" + std::to_string(line_no) + ": non-numeric cell '" +
                                  cell + "' in column '" + assets[j - 1] + "'");
            row[j - 1] = v;
        }
        dates.push_back(date);
        rows.push_back(std::move(row));
    }
    if (rows.size() < 2) throw IngestError(path + ": need at least two data rows");

    Eigen::MatrixXd values(static_cast<Eigen::Index>(rows.size()),
                           static_cast<Eigen::Index>(assets.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < assets.size(); ++j)
            values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];

    if (prices_to_returns) {
        for (Eigen::Index i = 0; i < values.rows(); ++i)
            for (Eigen::Index j = 0; j < values.cols(); ++j)
                if (!(values(i, j) > 0.0))
                    throw IngestError(path + ": nonpositive price at row " +
                                      std::to_string(i + 2) + ", column '" + assets[j] + "'");
        Eigen::MatrixXd rets(values.rows() - 1, values.cols());
        for (Eigen::Index i = 1; i < values.rows(); ++i)
            for (Eigen::Index j = 0; j < values.cols(); ++j)
                rets(i - 1, j) = 100.0 * std::log(values(i, j) / values(i - 1, j));
        dates.erase(dates.begin());
        values = std::move(rets);
    }
    return ReturnPanel::make(std::move(dates), std::move(assets), std::move(values));
}

void save_panel(const ReturnPanel& panel, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IngestError("cannot write " + path);
    out << "date";
    for (const auto& a : panel.assets) out << ',' << a;
    out << '\n';
    for (Eigen::Index i = 0; i < panel.rows(); ++i) {
        out << panel.dates[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < panel.cols(); ++j) out << ',' << g17(panel.values(i, j));
        out << '\n';
    }
}

std::pair<ReturnPanel, Eigen::VectorXd> demean(const ReturnPanel& panel) {
    const Eigen::VectorXd means = panel.values.colwise().mean();
    ReturnPanel centered = panel;
    centered.values.rowwise() -= means.transpose();
    return {std::move(centered), means};
}

Eigen::VectorXd portfolio_returns(const ReturnPanel& panel, const PortfolioWeights& w) {
    if (panel.cols() != w.size())
        throw DimError("portfolio_returns: panel has " + std::to_string(panel.cols()) +
                       " assets, weights have " + std::to_string(w.size()));
    return panel.values * w.w;
}

ReturnPanel slice_rows(const ReturnPanel& panel, Eigen::Index start, Eigen::Index len) {
    if (start < 0 || len < 2 || start + len > panel.rows())
        throw DimError("slice_rows: window out of range");
    ReturnPanel out;
    out.assets = panel.assets;
    out.dates.assign(panel.dates.begin() + start, panel.dates.begin() + start + len);
    out.values = panel.values.middleRows(start, len);
    return out;
}

}  // namespace dccrisk
