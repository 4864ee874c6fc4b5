#pragma once

#include <string>

#include <linoep/crossterm.hpp>
#include <linoep/gsom.hpp>
#include <linoep/linoep.hpp>

namespace epset {

// Serialized run reports: JSON with a stable field order and every floating
// point value rendered as a decimal string with 17 significant digits, so a
// report re-parses to bit-identical doubles and identical runs are
// byte-identical.

std::string gsom_report(const linoep::VectorSet& input,
                        const linoep::GsomResult& result, double tol);

std::string linoep_report(const linoep::VectorSet& input,
                          const linoep::LinoepResult& result, double tol);

std::string noep_report(const linoep::VectorSet& input,
                        const linoep::LinoepResult& result, double tol);

std::string analyze_report(const linoep::VectorSet& input,
                           const linoep::CrossTermReport& report, double tol);

std::string sweep_report(const linoep::VectorSet& input,
                         const linoep::SweepResult& sweep, double tol);

/// Minimal report emitted when a command fails; the diagnostic itself goes
/// to standard error only.
std::string error_report(const std::string& command, int exit_code);

}  // namespace epset
