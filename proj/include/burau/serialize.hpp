#ifndef BURAU_SERIALIZE_HPP
#define BURAU_SERIALIZE_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "burau/cover.hpp"
#include "burau/matrix.hpp"
#include "burau/reduction.hpp"
#include "burau/spectral.hpp"

namespace burau {

/// Fixed 12-significant-digit rendering used for all emitted numbers, so a
/// given configuration always produces byte-identical output.
std::string format_real(double value);

/// A double rounded to 12 significant digits (what format_real prints).
double rounded_real(double value);
nlohmann::json json_real(double value);

nlohmann::json to_json(const LaurentPoly& poly);
nlohmann::json to_json(const LaurentMatrix& matrix);
nlohmann::json to_json(const BivariatePoly& poly);
nlohmann::json to_json(const CoverVerdict& verdict);
nlohmann::json to_json(const SharpnessReport& report);
nlohmann::json unity_to_json(const std::vector<UnitySlot>& slots, int k, int dim);

std::string pretty_matrix(const LaurentMatrix& matrix);

/// CSV rows "theta,spectral_radius[,re_1,im_1,...]"; eigenvalue columns are
/// sorted by descending modulus.
std::string scan_to_csv(const SpectralScan& scan, bool include_eigenvalues);

/// Writes atomically: a temp file in the target directory is renamed over
/// the destination only after a complete write.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace burau

#endif
