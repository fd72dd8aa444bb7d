#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "esskit/alphabet.hpp"

namespace esskit {

enum class BandGranularity { OneD, FourD };

/// Affine accumulated-energy band. At checkpoint j (1-based, every position for
/// 1D granularity, every 4th position for 4D), the accumulated energy must stay in
///   [ceil(A + (j-1)*K1), min(floor(B + (j-1)*K2), e_max)].
struct BandParams {
  double lower_intercept = 0.0;  // A
  double upper_intercept = 0.0;  // B
  double lower_slope = 0.0;      // K1
  double upper_slope = 0.0;      // K2
  BandGranularity granularity = BandGranularity::FourD;
};

/// Per-position bounds on accumulated energy, plus an optional bound on the
/// accumulated fourth power (kurtosis limiting). Band constraints are materialized
/// into the lower/upper arrays at construction so the DP core is variant-agnostic.
class EnergyConstraintProfile {
 public:
  /// Plain sphere: accumulated energy never exceeds e_max.
  static EnergyConstraintProfile sphere(int block_length, std::int64_t e_max);

  /// Sphere plus an affine band.
  static EnergyConstraintProfile banded(int block_length, std::int64_t e_max,
                                        const BandParams& band);

  /// Sphere plus a fourth-power budget (K-ESS).
  static EnergyConstraintProfile kurtosis_limited(int block_length, std::int64_t e_max,
                                                  std::int64_t e4_max);

  int block_length() const { return block_length_; }
  std::int64_t e_max() const { return e_max_; }
  std::int64_t lower_bound(int n) const { return lower_[n]; }
  std::int64_t upper_bound(int n) const { return upper_[n]; }
  const std::optional<std::int64_t>& e4_max() const { return e4_max_; }
  const std::optional<BandParams>& band() const { return band_; }

  bool tracks_fourth_power() const { return e4_max_.has_value(); }

  /// True when accumulated energy e is allowed at position n (1..N).
  bool allows(int n, std::int64_t e) const { return lower_[n] <= e && e <= upper_[n]; }

  /// Checks profile consistency against an alphabet; throws ConfigError.
  void validate(const AmplitudeAlphabet& alphabet) const;

 private:
  EnergyConstraintProfile(int block_length, std::int64_t e_max);

  int block_length_;
  std::int64_t e_max_;
  std::vector<std::int64_t> lower_;  // index 0..N, lower_[0] = 0
  std::vector<std::int64_t> upper_;
  std::optional<std::int64_t> e4_max_;
  std::optional<BandParams> band_;
};

}  // namespace esskit
