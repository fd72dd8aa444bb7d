#include "esskit/alphabet.hpp"

#include "esskit/errors.hpp"

namespace esskit {

AmplitudeAlphabet::AmplitudeAlphabet(std::vector<int> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw ConfigError("alphabet must not be empty");
  int prev = 0;
  for (int a : amplitudes_) {
    if (a <= 0 || a % 2 == 0) throw ConfigError("amplitudes must be positive and odd");
    if (a <= prev) throw ConfigError("amplitudes must be strictly increasing");
    prev = a;
  }
  energies_.reserve(amplitudes_.size());
  fourth_powers_.reserve(amplitudes_.size());
  for (int a : amplitudes_) {
    const std::int64_t e = static_cast<std::int64_t>(a) * a;
    energies_.push_back(e);
    fourth_powers_.push_back(e * e);
  }
}

AmplitudeAlphabet AmplitudeAlphabet::qam64() { return AmplitudeAlphabet({1, 3, 5, 7}); }

int AmplitudeAlphabet::index_of(int amplitude) const {
  for (int i = 0; i < size(); ++i)
    if (amplitudes_[i] == amplitude) return i;
  return -1;
}

}  // namespace esskit
