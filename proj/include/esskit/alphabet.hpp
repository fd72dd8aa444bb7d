#pragma once

#include <cstdint>
#include <vector>

namespace esskit {

/// The 1D amplitude levels of a PAM/QAM constellation, e.g. {1,3,5,7} for 64-QAM.
/// Amplitudes must be strictly increasing, positive and odd; squared and fourth
/// powers are precomputed since the shaping trellis works on accumulated energies.
class AmplitudeAlphabet {
 public:
  explicit AmplitudeAlphabet(std::vector<int> amplitudes);

  /// Four amplitudes {1,3,5,7} (64-QAM per 2D).
  static AmplitudeAlphabet qam64();

  int size() const { return static_cast<int>(amplitudes_.size()); }
  int amplitude(int i) const { return amplitudes_[i]; }
  std::int64_t energy(int i) const { return energies_[i]; }
  std::int64_t fourth_power(int i) const { return fourth_powers_[i]; }

  const std::vector<int>& amplitudes() const { return amplitudes_; }
  const std::vector<std::int64_t>& energies() const { return energies_; }
  const std::vector<std::int64_t>& fourth_powers() const { return fourth_powers_; }

  std::int64_t min_energy() const { return energies_.front(); }
  std::int64_t max_energy() const { return energies_.back(); }
  std::int64_t min_fourth() const { return fourth_powers_.front(); }
  std::int64_t max_fourth() const { return fourth_powers_.back(); }

  /// Index of an amplitude value, or -1 if not a member.
  int index_of(int amplitude) const;

  bool operator==(const AmplitudeAlphabet&) const = default;

 private:
  std::vector<int> amplitudes_;
  std::vector<std::int64_t> energies_;
  std::vector<std::int64_t> fourth_powers_;
};

}  // namespace esskit
