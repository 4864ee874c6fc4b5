#include "epset/report.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include <json.hpp>
#include <linoep/io.hpp>

namespace epset {

namespace {

using Json = nlohmann::ordered_json;
using linoep::DenseVector;
using linoep::VectorSet;

Json json_scalar_list(const std::vector<double>& values) {
    Json out = Json::array();
    for (double v : values) out.push_back(linoep::format_double(v));
    return out;
}

Json json_vector(const DenseVector& v) { return json_scalar_list(v.entries()); }

Json json_vector_list(const VectorSet& set) {
    Json out = Json::array();
    for (const DenseVector& v : set) out.push_back(json_vector(v));
    return out;
}

Json json_matrix(const std::vector<std::vector<double>>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) out.push_back(json_scalar_list(row));
    return out;
}

Json json_gram(const linoep::GramMatrix& g) {
    Json out = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < g.size(); ++j) {
            row.push_back(linoep::format_double(g(i, j)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json report_head(const std::string& command, const VectorSet& input, double tol) {
    Json report;
    report["command"] = command;
    report["n"] = input.size();
    report["m"] = input.dim();
    report["tol"] = linoep::format_double(tol);
    report["status"] = "ok";
    return report;
}

std::string dump(const Json& report) { return report.dump(2) + "\n"; }

double relative_orthogonality(const DenseVector& a, const DenseVector& b) {
    const double scale = linoep::norm(a) * linoep::norm(b);
    if (scale == 0.0) return 0.0;
    return std::abs(linoep::inner(a, b)) / scale;
}

// Shared c-part payload of the linoep and noep reports. Returns the
// residuals block so callers can extend it and place it last.
Json fill_linoep_fields(Json& report, const VectorSet& input,
                        const linoep::LinoepResult& result) {
    report["c_vectors"] = json_vector_list(result.c_set);
    report["alphas"] = json_scalar_list(result.alphas);
    report["betas"] = json_scalar_list(result.betas);
    report["gamma"] = linoep::format_double(result.gamma);

    const linoep::EnergyReport energy = linoep::energy_report(result.c_set);
    report["energy"]["sum_energy"] = linoep::format_double(energy.sum_energy);
    report["energy"]["component_energy"] =
        linoep::format_double(energy.component_energy);

    double max_nested = 0.0;
    for (std::size_t k = 0; k < result.tail_sums.size(); ++k) {
        max_nested = std::max(
            max_nested, relative_orthogonality(result.c_set[k], result.tail_sums[k]));
    }

    // Triangular representation check: y_k = c_k + alpha_k * S_k.
    double max_reconstruction = 0.0;
    for (std::size_t k = 0; k < result.tail_sums.size(); ++k) {
        const DenseVector rebuilt =
            result.c_set[k] + result.alphas[k] * result.tail_sums[k];
        for (std::size_t j = 0; j < rebuilt.dim(); ++j) {
            max_reconstruction =
                std::max(max_reconstruction, std::abs(rebuilt[j] - input[k][j]));
        }
    }

    Json residuals;
    residuals["energy"] = linoep::format_double(energy.residual);
    residuals["max_nested"] = linoep::format_double(max_nested);
    residuals["reconstruction"] = linoep::format_double(max_reconstruction);
    return residuals;
}

}  // namespace

std::string gsom_report(const VectorSet& input, const linoep::GsomResult& result,
                        double tol) {
    Json report = report_head("gsom", input, tol);
    report["s_vectors"] = json_vector_list(result.orthogonal_set);
    report["coefficients"] = json_matrix(result.coeff_matrix);
    report["column_sums"] = json_scalar_list(result.column_sums);

    const linoep::GsomEnergyReport energy = linoep::gsom_energy_identity(result);
    report["energy"]["lhs"] = linoep::format_double(energy.lhs);
    report["energy"]["rhs"] = linoep::format_double(energy.rhs);

    const std::size_t n = input.size();
    const std::size_t m = input.dim();
    std::vector<double> rebuilt_sum(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const DenseVector& s = result.orthogonal_set[i];
        for (std::size_t j = 0; j < m; ++j) {
            rebuilt_sum[j] += result.column_sums[i] * s[j];
        }
    }
    const DenseVector input_sum = linoep::sum_vectors(input);
    double sum_reconstruction = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        sum_reconstruction =
            std::max(sum_reconstruction, std::abs(rebuilt_sum[j] - input_sum[j]));
    }

    double max_orthogonality = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            max_orthogonality = std::max(
                max_orthogonality, relative_orthogonality(result.orthogonal_set[i],
                                                          result.orthogonal_set[j]));
        }
    }

    report["residuals"]["energy_identity"] = linoep::format_double(energy.residual);
    report["residuals"]["sum_reconstruction"] =
        linoep::format_double(sum_reconstruction);
    report["residuals"]["max_orthogonality"] =
        linoep::format_double(max_orthogonality);
    return dump(report);
}

std::string linoep_report(const VectorSet& input, const linoep::LinoepResult& result,
                          double tol) {
    Json report = report_head("linoep", input, tol);
    report["residuals"] = fill_linoep_fields(report, input, result);
    return dump(report);
}

std::string noep_report(const VectorSet& input, const linoep::LinoepResult& result,
                        double tol) {
    Json report = report_head("noep", input, tol);
    Json residuals = fill_linoep_fields(report, input, result);

    report["d_vectors"] = json_vector_list(result.d_set);
    report["z2"] = json_vector(result.z2);

    double d_component_energy = 0.0;
    for (const DenseVector& d : result.d_set) d_component_energy += linoep::norm_sq(d);
    const double input_sum_energy = linoep::norm_sq(linoep::sum_vectors(input));
    report["energy"]["d_component_energy"] =
        linoep::format_double(d_component_energy);
    report["energy"]["input_sum_energy"] = linoep::format_double(input_sum_energy);

    const DenseVector z1 = linoep::sum_vectors(result.c_set);
    residuals["d_sum_reconstruction"] =
        linoep::format_double(result.d_sum_residual);
    residuals["d_energy_identity"] =
        linoep::format_double(std::abs(input_sum_energy - d_component_energy));
    residuals["z_orthogonality"] =
        linoep::format_double(relative_orthogonality(z1, result.z2));
    report["residuals"] = std::move(residuals);
    return dump(report);
}

std::string analyze_report(const VectorSet& input,
                           const linoep::CrossTermReport& analysis, double tol) {
    Json report = report_head("analyze", input, tol);
    report["gram"] = json_gram(analysis.gram);
    report["cross_term"] = linoep::format_double(analysis.total_cross_term);

    const linoep::EnergyReport energy = linoep::energy_report(input);
    report["energy"]["sum_energy"] = linoep::format_double(energy.sum_energy);
    report["energy"]["component_energy"] =
        linoep::format_double(energy.component_energy);

    report["is_energy_preserving"] = analysis.energy_preserving;
    Json families = Json::array();
    if (analysis.pairwise_orthogonal) families.push_back("PairwiseOrthogonal");
    if (!analysis.nested_permutations.empty()) families.push_back("Nested");
    if (analysis.cancellation) families.push_back("Cancellation");
    report["families"] = std::move(families);
    report["nested_permutations"] = analysis.nested_permutations;

    report["residuals"]["cross_term_consistency"] = linoep::format_double(
        std::abs(analysis.total_cross_term - analysis.energy_gap));
    return dump(report);
}

std::string sweep_report(const VectorSet& input, const linoep::SweepResult& sweep,
                         double tol) {
    Json report = report_head("sweep", input, tol);
    const double input_sum_energy = linoep::norm_sq(linoep::sum_vectors(input));

    Json entries = Json::array();
    for (const linoep::SweepEntry& entry : sweep.entries) {
        Json e;
        e["permutation"] = entry.permutation;
        e["alphas"] = json_scalar_list(entry.result.alphas);
        e["betas"] = json_scalar_list(entry.result.betas);
        e["gamma"] = linoep::format_double(entry.result.gamma);

        double d_component_energy = 0.0;
        for (const DenseVector& d : entry.result.d_set) {
            d_component_energy += linoep::norm_sq(d);
        }
        e["residuals"]["energy"] = linoep::format_double(entry.energy_residual);
        e["residuals"]["d_sum_reconstruction"] =
            linoep::format_double(entry.result.d_sum_residual);
        e["residuals"]["d_energy_identity"] = linoep::format_double(
            std::abs(input_sum_energy - d_component_energy));
        entries.push_back(std::move(e));
    }
    report["entries"] = std::move(entries);
    return dump(report);
}

std::string error_report(const std::string& command, int exit_code) {
    Json report;
    report["command"] = command;
    report["status"] = "error";
    report["exit_code"] = exit_code;
    return dump(report);
}

}  // namespace epset
